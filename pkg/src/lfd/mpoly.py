"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a ring given by an ordered tuple of variable names
and is stored as a dict mapping exponent tuples to nonzero ``Fraction``
coefficients.  The zero polynomial is the empty dict.  On top of the
arithmetic this module provides the operations the rest of the package is
built from: formal derivatives, exact division, scalar-multiple detection,
determinants of polynomial matrices by fraction-free (Bareiss)
elimination, and a Monte Carlo squarefreeness test by restriction to
random rational lines.

Serialisation: a text grammar (terms ``c*x^e*y`` joined by ``+``/``-``,
rationals as ``num/den``) and a JSON form
``{"ring": [names], "terms": [{"coeff": "num/den", "exps": [..]}]}``.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import SAMPLE_BOUND

Exponent = tuple[int, ...]
Ring = tuple[str, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials, compatible with multiplication.

    ``kind`` is ``"degrevlex"`` or ``"lex"``.  ``perm`` optionally lists
    variable indices from most to least significant; default is ring order.
    """

    kind: str = "degrevlex"
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exp: Exponent):
        """Sort key: bigger key = bigger monomial."""
        e = exp if self.perm is None else tuple(exp[i] for i in self.perm)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


class MPoly:
    """Immutable sparse polynomial over Q in a fixed ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[Exponent, Fraction]):
        object.__setattr__(self, "ring", tuple(ring))
        clean = {e: c for e, c in terms.items() if c}
        for e in clean:
            if len(e) != len(ring):
                raise ValueError("exponent length does not match ring")
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: Ring) -> "MPoly":
        return MPoly(ring, {})

    @staticmethod
    def constant(ring: Ring, c) -> "MPoly":
        c = Fraction(c)
        n = len(ring)
        return MPoly(ring, {(0,) * n: c} if c else {})

    @staticmethod
    def variable(ring: Ring, index: int) -> "MPoly":
        if not 0 <= index < len(ring):
            raise ValueError(f"variable index {index} out of range")
        e = [0] * len(ring)
        e[index] = 1
        return MPoly(ring, {tuple(e): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def leading(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "MPoly":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self * (1 / c)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "MPoly") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.ring, other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.ring)
            return MPoly(self.ring, {e: c * v for e, v in self.terms.items()})
        self._check_ring(other)
        if not self.terms or not other.terms:
            return MPoly.zero(self.ring)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                return self.is_constant() and self.constant_value() == other or (
                    self.is_zero() and other == 0
                )
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus / evaluation --------------------------------------------

    def diff(self, var: int) -> "MPoly":
        if not 0 <= var < len(self.ring):
            raise ValueError(f"variable index {var} out of range")
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[var]:
                d = list(e)
                d[var] -= 1
                out[tuple(d)] = c * e[var]
        return MPoly(self.ring, out)

    def subs(self, point: list[Fraction]) -> Fraction:
        if len(point) != len(self.ring):
            raise ValueError("point length does not match ring")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def restrict_line(self, a: list, b: list) -> list[Fraction]:
        """Coefficients of f(a*t + b) as a univariate polynomial in t.

        Returned list has index = degree in t, trailing zeros trimmed.
        """
        n = len(self.ring)
        if len(a) != n or len(b) != n:
            raise ValueError("line data length does not match ring")
        d = max(self.total_degree(), 0)
        out = [Fraction(0)] * (d + 1)
        # (a_i t + b_i)^k expanded per variable, then convolved per term.
        for e, c in self.terms.items():
            term = [c]
            for i, k in enumerate(e):
                for _ in range(k):
                    ai, bi = Fraction(a[i]), Fraction(b[i])
                    nxt = [Fraction(0)] * (len(term) + 1)
                    for j, v in enumerate(term):
                        if v:
                            nxt[j] += v * bi
                            nxt[j + 1] += v * ai
                    term = nxt
            for j, v in enumerate(term):
                out[j] += v
        while out and not out[-1]:
            out.pop()
        return out

    # -- text form ---------------------------------------------------------

    def to_text(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.ring, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return head + ("" if len(pieces) == 1 else " " + " ".join(pieces[1:]))

    __str__ = to_text

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: DEGREVLEX.key(kv[0]), reverse=True)
        return {
            "ring": list(self.ring),
            "terms": [{"coeff": str(c), "exps": list(e)} for e, c in items],
        }

    @staticmethod
    def from_json(data: dict) -> "MPoly":
        ring = tuple(data["ring"])
        terms: dict[Exponent, Fraction] = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exps"])
            terms[e] = terms.get(e, Fraction(0)) + Fraction(t["coeff"])
        return MPoly(ring, terms)


_TOKEN = re.compile(r"\s*([+-]|[A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d+|\^|\*)")


def parse_poly(text: str, ring: Ring) -> MPoly:
    """Parse the text grammar: signed terms of ``coeff*var^e*...`` factors."""
    ring = tuple(ring)
    index = {name: i for i, name in enumerate(ring)}
    pos = 0
    tokens: list[str] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    result = MPoly.zero(ring)
    i = 0
    n = len(tokens)
    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial text")
        coeff = sign
        exps = [0] * len(ring)
        expect_factor = True
        while i < n:
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError(f"missing operator before {tok!r}")
            if tok[0].isdigit():
                coeff *= Fraction(tok)
                i += 1
            else:
                if tok not in index:
                    raise ValueError(f"unknown variable {tok!r}")
                var = index[tok]
                i += 1
                power = 1
                if i < n and tokens[i] == "^":
                    i += 1
                    if i >= n or not tokens[i].isdigit():
                        raise ValueError("malformed exponent")
                    power = int(tokens[i])
                    i += 1
                exps[var] += power
            expect_factor = False
        result = result + MPoly(ring, {tuple(exps): coeff})
    return result


# -- spec operations -------------------------------------------------------


def partial_derivative(f: MPoly, var: int) -> MPoly:
    """Formal partial derivative of f with respect to variable ``var``."""
    return f.diff(var)


def evaluate(f: MPoly, point: list) -> Fraction:
    """Exact value of f at a rational point."""
    return f.subs([Fraction(x) for x in point])


def divide_exact(f: MPoly, g: MPoly, order: MonomialOrder = DEGREVLEX) -> MPoly | None:
    """Quotient q with f = q*g, or None when g does not divide f exactly.

    Multivariate long division by the single divisor g; the division is
    abandoned as soon as a term cannot be cancelled, since later reduction
    steps only produce strictly smaller monomials.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check_ring(g)
    if f.is_zero():
        return MPoly.zero(f.ring)
    lt_e, lt_c = g.leading(order)
    quotient: dict[Exponent, Fraction] = {}
    rem = dict(f.terms)
    while rem:
        re_ = max(rem, key=order.key)
        rc = rem[re_]
        qe = tuple(a - b for a, b in zip(re_, lt_e))
        if any(x < 0 for x in qe):
            return None
        qc = rc / lt_c
        quotient[qe] = quotient.get(qe, Fraction(0)) + qc
        for e, c in g.terms.items():
            me = tuple(x + y for x, y in zip(qe, e))
            s = rem.get(me, 0) - qc * c
            if s:
                rem[me] = s
            else:
                rem.pop(me, None)
    return MPoly(f.ring, quotient)


def is_scalar_multiple(f: MPoly, g: MPoly) -> Fraction | None:
    """c with f = c*g, or None.  f = g = 0 returns 1 by convention."""
    if g.is_zero():
        return Fraction(1) if f.is_zero() else None
    if f.is_zero():
        return Fraction(0)
    ef, cf = f.leading()
    eg, cg = g.leading()
    if ef != eg:
        return None
    c = cf / cg
    if len(f.terms) != len(g.terms):
        return None
    for e, v in g.terms.items():
        if f.terms.get(e) != c * v:
            return None
    return c


# -- polynomial matrices ---------------------------------------------------


class PolyMatrix:
    """Rectangular matrix of polynomials over one ring, row-major."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: list[MPoly]):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match matrix shape")
        ring = entries[0].ring if entries else ()
        for e in entries:
            if e.ring != ring:
                raise ValueError("matrix entries must share one ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @staticmethod
    def from_rows(rows: list[list[MPoly]]) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return PolyMatrix(r, c, flat)

    def entry(self, i: int, j: int) -> MPoly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[MPoly]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def submatrix(self, row_idx: list[int], col_idx: list[int]) -> "PolyMatrix":
        flat = [self.entry(i, j) for i in row_idx for j in col_idx]
        return PolyMatrix(len(row_idx), len(col_idx), flat)

    def __repr__(self):
        body = "; ".join(", ".join(str(self.entry(i, j)) for j in range(self.cols)) for i in range(self.rows))
        return f"PolyMatrix[{body}]"


def poly_det(m: PolyMatrix) -> MPoly:
    """Determinant by fraction-free (Bareiss) elimination with full pivoting.

    Exact divisions by the previous pivot are guaranteed over an integral
    domain; a failed division therefore raises, it is never a user error.
    The empty 0x0 matrix has determinant 1.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square matrix ({m.rows}x{m.cols})")
    n = m.rows
    if n == 0:
        return MPoly.constant(m.ring, 1)
    a = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    ring = m.ring
    sign = 1
    prev: MPoly | None = None
    for k in range(n - 1):
        # Full pivoting: pick the sparsest nonzero entry to limit growth.
        pivot = None
        best = None
        for i in range(k, n):
            for j in range(k, n):
                t = len(a[i][j].terms)
                if t and (best is None or t < best):
                    best, pivot = t, (i, j)
        if pivot is None:
            return MPoly.zero(ring)
        pi, pj = pivot
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                e = pk * a[i][j] - aik * a[k][j]
                if prev is not None and not e.is_zero():
                    q = divide_exact(e, prev)
                    if q is None:
                        raise RuntimeError("Bareiss exact division failed (internal invariant)")
                    e = q
                a[i][j] = e
        prev = pk
    return a[n - 1][n - 1] * sign if sign < 0 else a[n - 1][n - 1]


def poly_det_cofactor(m: PolyMatrix) -> MPoly:
    """Determinant by Laplace expansion, memoised over column subsets.

    Independent of the Bareiss path; used to cross-check it.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square matrix ({m.rows}x{m.cols})")
    n = m.rows
    if n == 0:
        return MPoly.constant(m.ring, 1)
    cache: dict[tuple[int, ...], MPoly] = {}

    def minor(cols: tuple[int, ...]) -> MPoly:
        if cols in cache:
            return cache[cols]
        row = n - len(cols)
        if len(cols) == 1:
            out = m.entry(row, cols[0])
        else:
            out = MPoly.zero(m.ring)
            for pos, c in enumerate(cols):
                e = m.entry(row, c)
                if e.is_zero():
                    continue
                sub = minor(cols[:pos] + cols[pos + 1 :])
                out = out + (e * sub if pos % 2 == 0 else -(e * sub))
        cache[cols] = out
        return out

    return minor(tuple(range(n)))


def all_minors(m: PolyMatrix, size: int) -> list[MPoly]:
    """All size x size minors of m (deduplicated, zeros dropped)."""
    if size < 1 or size > min(m.rows, m.cols):
        raise ValueError(f"no {size}x{size} minors in a {m.rows}x{m.cols} matrix")
    seen: set[MPoly] = set()
    out: list[MPoly] = []
    for ri in combinations(range(m.rows), size):
        for ci in combinations(range(m.cols), size):
            d = poly_det(m.submatrix(list(ri), list(ci)))
            if not d.is_zero() and d not in seen:
                seen.add(d)
                out.append(d)
    return out


# -- squarefreeness --------------------------------------------------------


class Squarefreeness(enum.Enum):
    SQUAREFREE = "Squarefree"
    NOT_SQUAREFREE = "NotSquarefree"
    INCONCLUSIVE = "Inconclusive"


def _upoly_deg(p: list[Fraction]) -> int:
    return len(p) - 1


def _upoly_diff(p: list[Fraction]) -> list[Fraction]:
    out = [c * k for k, c in enumerate(p)][1:]
    while out and not out[-1]:
        out.pop()
    return out


def _upoly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lb
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        while a and not a[-1]:
            a.pop()
    return a


def _upoly_gcd_degree(p: list[Fraction], q: list[Fraction]) -> int:
    while q:
        p, q = q, _upoly_rem(p, q)
    return _upoly_deg(p) if p else -1


def _line_is_squarefree(restricted: list[Fraction]) -> bool:
    return _upoly_gcd_degree(restricted, _upoly_diff(restricted)) == 0


def squarefree_test(f: MPoly, trials: int, seed: int) -> Squarefreeness:
    """Monte Carlo squarefreeness via restriction to random rational lines.

    Each trial restricts f to x = a*t + b with integer a, b drawn uniformly
    from [-10^4, 10^4] and checks gcd(f|, f|') on lines that preserve the
    total degree.  A repeated factor on one line is confirmed on a second
    independent line before returning NotSquarefree (a genuine square
    factor survives every degree-preserving restriction, so two agreeing
    lines are decisive).  By Schwartz-Zippel a degree-preserving line of a
    squarefree f shows a spurious repeated factor with probability at most
    deg(f)*(deg(f)-1)/(2*10^4+1) per trial, so the NotSquarefree error is
    bounded by the square of that.  If no degree-preserving line is found
    within the trial budget the verdict is Inconclusive.
    """
    if f.is_zero():
        raise ValueError("squarefree_test is undefined for the zero polynomial")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    d = f.total_degree()
    if d == 0:
        return Squarefreeness.SQUAREFREE
    rng = random.Random(seed)
    n = len(f.ring)

    def draw_line() -> list[Fraction] | None:
        a = [rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(n)]
        b = [rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND) for _ in range(n)]
        p = f.restrict_line(a, b)
        return p if _upoly_deg(p) == d else None

    preserved = 0
    unconfirmed_repeat = False
    for _ in range(trials):
        p = draw_line()
        if p is None:
            continue
        preserved += 1
        if _line_is_squarefree(p):
            continue
        # Confirmation on an independent line.  A clean confirmation means
        # the repeated factor was a sampling fluke (a true square factor
        # survives every degree-preserving restriction).
        confirmed_clean = False
        for _ in range(trials):
            q = draw_line()
            if q is not None:
                if not _line_is_squarefree(q):
                    return Squarefreeness.NOT_SQUAREFREE
                confirmed_clean = True
                break
        if not confirmed_clean:
            unconfirmed_repeat = True
    if preserved and not unconfirmed_repeat:
        return Squarefreeness.SQUAREFREE
    return Squarefreeness.INCONCLUSIVE
