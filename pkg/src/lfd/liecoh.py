"""Lie algebra presentations, Chevalley-Eilenberg cohomology, GLCT checks.

A finite-dimensional Lie algebra over Q is presented by structure
constants; the cochain complex with trivial coefficients has k-th term
spanned by sorted k-subsets of the basis, and the differential only keeps
the bracket sum (the module-action sum vanishes for constant
coefficients).  Betti numbers over Q equal those over C since ranks of
rational matrices do not change under field extension.

The comparison side: a divisor's symmetry group is declared by its
topological type (torus, GL, SL, or triangular factors) and its rational
cohomology is the corresponding product of Poincare polynomials.  The
global comparison verdict is plain coefficientwise equality against the
Lie algebra Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .linalg import RankTracker, SpanSolver, nullspace, rank
from .logder import LinearVectorField, VectorFieldBasis, bracket
from .mpoly import MPoly

Row = list[Fraction]
Matrix = list[Row]


@dataclass(frozen=True)
class LiePresentation:
    """Structure constants c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k (i < j)."""

    dim: int
    labels: tuple[str, ...]
    structure: dict[tuple[int, int], tuple[Fraction, ...]]

    def __init__(self, dim: int, structure, labels=None):
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        labels = tuple(labels)
        if len(labels) != dim:
            raise ValueError("label count must equal dimension")
        clean = {}
        for (i, j), coeffs in structure.items():
            if not 0 <= i < j < dim:
                raise ValueError("structure keys must satisfy 0 <= i < j < dim")
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != dim:
                raise ValueError("bracket coefficient vector has wrong length")
            if any(coeffs):
                clean[(i, j)] = coeffs
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "structure", clean)

    def bracket_coeffs(self, i: int, j: int) -> tuple[Fraction, ...]:
        """[e_i, e_j] as a coefficient vector; antisymmetry built in."""
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self.structure.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-c for c in self.structure.get((j, i), (Fraction(0),) * self.dim))

    def bracket_vectors(self, u: Row, v: Row) -> Row:
        """[u, v] for arbitrary coefficient vectors."""
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.bracket_coeffs(i, j)):
                    if c:
                        out[k] += a * b * c
        return out

    def jacobi_holds(self) -> bool:
        n = self.dim
        e = [[Fraction(k == i) for k in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s1 = self.bracket_vectors(self.bracket_coeffs(i, j), e[k])
                    s2 = self.bracket_vectors(self.bracket_coeffs(j, k), e[i])
                    s3 = self.bracket_vectors(self.bracket_coeffs(k, i), e[j])
                    if any(a + b + c for a, b, c in zip(s1, s2, s3)):
                        return False
        return True

    @staticmethod
    def from_matrices(mats: list, labels=None) -> "LiePresentation":
        """Structure constants of a matrix Lie algebra given by a basis."""
        n = len(mats)
        size = len(mats[0])
        flat = [[Fraction(m[a][b]) for a in range(size) for b in range(size)] for m in mats]
        solver = SpanSolver(flat)
        structure = {}
        for i in range(n):
            for j in range(i + 1, n):
                comm = [
                    [
                        sum((Fraction(mats[i][a][k]) * Fraction(mats[j][k][b]) for k in range(size)), Fraction(0))
                        - sum((Fraction(mats[j][a][k]) * Fraction(mats[i][k][b]) for k in range(size)), Fraction(0))
                        for b in range(size)
                    ]
                    for a in range(size)
                ]
                coeffs = solver.express([c for row in comm for c in row])
                if coeffs is None:
                    raise ValueError("matrix set is not closed under commutators")
                structure[(i, j)] = tuple(coeffs)
        return LiePresentation(n, structure, labels)

    def direct_sum(self, other: "LiePresentation") -> "LiePresentation":
        n, m = self.dim, other.dim
        structure = {}
        for (i, j), c in self.structure.items():
            structure[(i, j)] = c + (Fraction(0),) * m
        for (i, j), c in other.structure.items():
            structure[(i + n, j + n)] = (Fraction(0),) * n + c
        return LiePresentation(n + m, structure, self.labels + other.labels)

    def change_basis(self, p: Matrix) -> "LiePresentation":
        """Presentation in the basis f_a = sum_i p[i][a] e_i (p invertible)."""
        n = self.dim
        inv = _inverse(p)
        if inv is None:
            raise ValueError("basis change matrix is singular")
        structure = {}
        for a in range(n):
            for b in range(a + 1, n):
                u = [p[i][a] for i in range(n)]
                v = [p[i][b] for i in range(n)]
                w = self.bracket_vectors(u, v)
                coeffs = tuple(
                    sum((inv[m][k] * w[k] for k in range(n)), Fraction(0)) for m in range(n)
                )
                structure[(a, b)] = coeffs
        return LiePresentation(n, structure)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "structure": [
                {"i": i, "j": j, "coeffs": [str(c) for c in coeffs]}
                for (i, j), coeffs in sorted(self.structure.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "LiePresentation":
        structure = {
            (entry["i"], entry["j"]): tuple(Fraction(c) for c in entry["coeffs"])
            for entry in data["structure"]
        }
        return LiePresentation(data["dim"], structure, data.get("labels"))


def _inverse(p: Matrix) -> Matrix | None:
    n = len(p)
    aug = [[Fraction(p[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                g = aug[i][c]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def structure_constants(b: VectorFieldBasis) -> LiePresentation:
    """Express every pairwise bracket of the basis in the basis itself."""
    vectors = [f.vectorize() for f in b.fields]
    solver = SpanSolver(vectors)
    n = len(b.fields)
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = solver.express(bracket(b.fields[i], b.fields[j]).vectorize())
            if coeffs is None:
                raise ValueError(f"bracket of fields {i} and {j} is not in the span")
            structure[(i, j)] = tuple(coeffs)
    return LiePresentation(n, structure)


def ce_differential(p: LiePresentation, k: int) -> Matrix:
    """Matrix of d: Lambda^k g* -> Lambda^(k+1) g* over sorted-subset bases.

    With trivial coefficients (d w)(v_1 ^ ... ^ v_{k+1}) is the alternating
    sum over position pairs a < b of (-1)^(a+b) w([v_a, v_b] ^ rest); the
    sign of sorting the bracket term into its subset is the parity of its
    insertion position.  Row indices run over (k+1)-subsets, columns over
    k-subsets, both in lexicographic order.
    """
    n = p.dim
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} out of range for dimension {n}")
    domain = list(combinations(range(n), k))
    codomain = list(combinations(range(n), k + 1))
    index = {s: i for i, s in enumerate(domain)}
    matrix = [[Fraction(0)] * len(domain) for _ in codomain]
    for row, subset in enumerate(codomain):
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                coeffs = p.bracket_coeffs(subset[a], subset[b])
                if not any(coeffs):
                    continue
                rest = subset[:a] + subset[a + 1 : b] + subset[b + 1 :]
                pair_sign = 1 if (a + b) % 2 == 0 else -1  # (-1)^(i+j) at 1-based positions i=a+1, j=b+1
                rest_set = set(rest)
                for m, c in enumerate(coeffs):
                    if not c or m in rest_set:
                        continue
                    pos = sum(1 for r in rest if r < m)
                    target = tuple(sorted(rest + (m,)))
                    sign = pair_sign if pos % 2 == 0 else -pair_sign
                    matrix[row][index[target]] += sign * c
    return matrix


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    return [
        [sum((x * b[k][j] for k, x in enumerate(row) if x), Fraction(0)) for j in range(len(b[0]))]
        for row in a
    ]


@dataclass(frozen=True)
class CEComplex:
    """The full cochain complex; construction asserts d o d = 0."""

    dim: int
    differentials: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @staticmethod
    def build(p: LiePresentation) -> "CEComplex":
        n = p.dim
        ds = [ce_differential(p, k) for k in range(n)]
        for k in range(n - 1):
            prod = _matmul(ds[k + 1], ds[k])
            if any(any(row) for row in prod):
                raise AssertionError(f"d_{k + 1} o d_{k} != 0: structure constants violate Jacobi")
        frozen = tuple(tuple(tuple(row) for row in d) for d in ds)
        return CEComplex(n, frozen)

    def differential(self, k: int) -> Matrix:
        if k < 0 or k >= self.dim:
            return []
        return [list(row) for row in self.differentials[k]]

    def betti(self) -> "BettiVector":
        n = self.dim
        ranks = [rank(self.differential(k)) for k in range(n)] + [0]
        betti = []
        for k in range(n + 1):
            prev = ranks[k - 1] if k else 0
            betti.append(comb(n, k) - ranks[k] - prev)
        return BettiVector(tuple(betti))


@dataclass(frozen=True)
class BettiVector:
    betti: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.betti):
            raise ValueError("negative Betti number: rank bookkeeping is broken")
        if self.betti and self.betti[0] != 1:
            raise ValueError("b_0 must be 1 for trivial coefficients")

    def __iter__(self):
        return iter(self.betti)

    def to_json(self) -> list[int]:
        return list(self.betti)


def lie_betti(p: LiePresentation) -> BettiVector:
    """Betti numbers b_0..b_n of the cochain complex, by exact ranks."""
    return CEComplex.build(p).betti()


def betti_number(p: LiePresentation, k: int) -> int:
    """Single Betti number without building the whole complex."""
    n = p.dim
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} out of range")
    rk = rank(ce_differential(p, k)) if k < n else 0
    rk_prev = rank(ce_differential(p, k - 1)) if k > 0 else 0
    return comb(n, k) - rk - rk_prev


def is_reductive(p: LiePresentation) -> bool:
    """Center plus derived algebra spans everything, Killing nondegenerate.

    The algebra is reductive iff g = z(g) (+) [g, g] as vector spaces and
    the Killing form restricted to [g, g] is nondegenerate; over a central
    complement the restriction equals the derived algebra's own Killing
    form, so this is Cartan's semisimplicity criterion in disguise.
    """
    n = p.dim
    ad_rows = []
    for j in range(n):
        for k in range(n):
            ad_rows.append([p.bracket_coeffs(i, j)[k] for i in range(n)])
    center = nullspace(ad_rows)
    derived: list[Row] = []
    tracker = RankTracker(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = list(p.bracket_coeffs(i, j))
            if tracker.add(v):
                derived.append(v)
    if len(center) + len(derived) != n:
        return False
    if rank(center + derived) != n:
        return False
    if not derived:
        return True

    def ad(vec: Row) -> Matrix:
        return [
            [sum((vec[i] * p.bracket_coeffs(i, j)[k] for i in range(n)), Fraction(0)) for j in range(n)]
            for k in range(n)
        ]

    mats = [ad(v) for v in derived]
    gram = [
        [
            sum((sum((x[a][b] * y[b][a] for b in range(n)), Fraction(0)) for a in range(n)), Fraction(0))
            for y in mats
        ]
        for x in mats
    ]
    return rank(gram) == len(derived)


@dataclass(frozen=True)
class GroupTypeDecomp:
    """Declared topological type of a symmetry group, as product factors.

    Kinds: ``T`` (torus of rank k), ``GL``/``SL`` (general/special linear),
    ``B`` (invertible upper triangular, which retracts onto its torus).
    """

    factors: tuple[tuple[str, int], ...]

    def __init__(self, factors):
        factors = tuple((str(kind), int(m)) for kind, m in factors)
        if not factors:
            raise ValueError("group type needs at least one factor")
        for kind, m in factors:
            if kind not in ("T", "GL", "SL", "B"):
                raise ValueError(f"unknown group factor kind {kind!r}")
            if m < 1:
                raise ValueError("factor parameter must be positive")
        object.__setattr__(self, "factors", factors)

    @staticmethod
    def parse(text: str) -> "GroupTypeDecomp":
        """Parse ``"GL:2"`` or products like ``"T:1,B:2"``."""
        factors = []
        for piece in text.replace("x", ",").split(","):
            piece = piece.strip()
            if not piece:
                continue
            kind, _, num = piece.partition(":")
            factors.append((kind.strip(), int(num)))
        return GroupTypeDecomp(factors)

    def __str__(self):
        return ",".join(f"{k}:{m}" for k, m in self.factors)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def group_poincare(g: GroupTypeDecomp) -> list[int]:
    """Coefficients of the rational Poincare polynomial of the group.

    Tori and triangular groups contribute (1+t)^k; GL(m) and SL(m)
    contribute the products of (1+t^(2i-1)) over i up to m, starting at
    i=1 and i=2 respectively.
    """
    poly = [1]
    for kind, m in g.factors:
        if kind in ("T", "B"):
            for _ in range(m):
                poly = _polymul(poly, [1, 1])
        else:
            start = 1 if kind == "GL" else 2
            for i in range(start, m + 1):
                factor = [0] * (2 * i)
                factor[0] = 1
                factor[2 * i - 1] = 1
                poly = _polymul(poly, factor)
    return poly


@dataclass(frozen=True)
class GLCTReport:
    lie_betti: BettiVector
    group_betti: tuple[int, ...]
    holds: bool

    def to_json(self) -> dict:
        return {
            "lie_betti": list(self.lie_betti),
            "group_betti": list(self.group_betti),
            "holds": self.holds,
        }


def glct_check(b: VectorFieldBasis, g: GroupTypeDecomp) -> GLCTReport:
    """Compare Lie algebra Betti numbers with the declared group's.

    The comparison verdict holds iff the two coefficient sequences agree
    after zero-padding to a common length.
    """
    betti = lie_betti(structure_constants(b))
    group = group_poincare(g)
    width = max(len(betti.betti), len(group))
    lie_padded = list(betti) + [0] * (width - len(betti.betti))
    group_padded = list(group) + [0] * (width - len(group))
    return GLCTReport(
        lie_betti=betti,
        group_betti=tuple(group_padded),
        holds=lie_padded == group_padded,
    )
