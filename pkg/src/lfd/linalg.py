"""Exact linear algebra over the rationals.

Everything here works on plain lists of ``Fraction``.  Ranks are computed
fraction-free: rows are scaled to integers and eliminated with the
two-by-two determinant update, so no rational arithmetic happens in the
inner loop.  Solving and span membership use ordinary Gaussian elimination
with Fraction pivots, which is exact as well.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(rows: list[list[Fraction]]) -> int:
    """Rank of the matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    m = _integer_rows(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            if m[i][c]:
                q = m[i][c]
                m[i] = [p * a - q * b for a, b in zip(m[i], m[r])]
                g = 0
                for a in m[i]:
                    g = gcd(g, a)
                if g > 1:
                    m[i] = [a // g for a in m[i]]
        r += 1
        if r == nrows:
            break
    return r


def determinant(rows: list[list[Fraction]]) -> Fraction:
    """Determinant of a square rational matrix by Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    m = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """One solution x of a x = b, or None if the system is inconsistent.

    ``a`` has one row per equation.  Underdetermined systems get free
    variables set to zero.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if aug[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in pivots:
        x[c] = aug[i][ncols]
    return x


def nullspace(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix ``a`` (one row per equation)."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][c]
        basis.append(v)
    return basis


class RankTracker:
    """Incremental rank of a growing set of vectors."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: list[Fraction]) -> bool:
        """Insert a vector; True iff it enlarged the span."""
        vec = list(vector)
        for row, piv in zip(self._rows, self._pivots):
            if vec[piv]:
                f = vec[piv]
                for k in range(self.dim):
                    vec[k] -= f * row[k]
        for c in range(self.dim):
            if vec[c]:
                self._rows.append([x / vec[c] for x in vec])
                self._pivots.append(c)
                return True
        return False


class SpanSolver:
    """Incremental span membership with coefficient recovery.

    Feed a fixed list of spanning vectors once; afterwards ``express``
    writes further vectors as rational combinations of them (or reports
    that none exists).  Used for bracket-closure checks, where many
    vectors are tested against one basis.
    """

    def __init__(self, vectors: list[list[Fraction]]):
        self.n = len(vectors)
        self.dim = len(vectors[0]) if vectors else 0
        # Rows of the augmented matrix [v | e_i]; reduced incrementally.
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        for i, v in enumerate(vectors):
            coeffs = [Fraction(0)] * self.n
            coeffs[i] = Fraction(1)
            self._insert(list(v), coeffs)

    def _reduce(self, vec: list[Fraction], coeffs: list[Fraction]) -> int | None:
        """Eliminate vec against stored pivot rows; returns its pivot column."""
        for row, piv in zip(self._rows, self._pivots):
            if vec[piv]:
                f = vec[piv]
                for k in range(self.dim):
                    vec[k] -= f * row[k]
                for k in range(self.n):
                    coeffs[k] -= f * row[self.dim + k]
        for c in range(self.dim):
            if vec[c]:
                return c
        return None

    def _insert(self, vec: list[Fraction], coeffs: list[Fraction]) -> None:
        piv = self._reduce(vec, coeffs)
        if piv is None:
            return
        f = vec[piv]
        row = [x / f for x in vec] + [x / f for x in coeffs]
        self._rows.append(row)
        self._pivots.append(piv)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def express(self, vector: list[Fraction]) -> list[Fraction] | None:
        """Coefficients c with vector = sum c_i * basis_i, or None."""
        vec = list(vector)
        coeffs = [Fraction(0)] * self.n
        if self._reduce(vec, coeffs) is not None:
            return None
        return [-c for c in coeffs]

    def contains(self, vector: list[Fraction]) -> bool:
        return self.express(vector) is not None
