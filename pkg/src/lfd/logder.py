"""Linear vector fields and the Saito-criterion machinery.

A degree-zero vector field on C^n is encoded by an n x n rational matrix A
with delta(x_j) = sum_i x_i * A[i][j]; under this encoding the Lie bracket
of fields is the matrix commutator AB - BA.  A candidate basis of n such
fields is verified against Saito's criterion: the determinant of the
coefficient matrix (delta_i(x_j)) must be a nonzero squarefree polynomial
and every basis field must be logarithmic for it, i.e. send it to a scalar
multiple of itself.  The module also splits a verified basis into the
Euler field plus an annihilator basis, and solves for pointwise Euler
fields, which later feed the Euler-homogeneity strata.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import DEFAULT_SEED, DEFAULT_TRIALS
from .linalg import RankTracker, SpanSolver, solve
from .mpoly import MPoly, PolyMatrix, Ring, Squarefreeness, is_scalar_multiple, poly_det, squarefree_test


class LinearVectorField:
    """xA d^t encoding of a vector field with linear coefficients."""

    __slots__ = ("ring", "matrix")

    def __init__(self, ring: Ring, matrix):
        n = len(ring)
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be {n}x{n} for ring {ring}")
        self.ring = tuple(ring)
        self.matrix = rows

    # -- constructors --------------------------------------------------

    @staticmethod
    def euler(ring: Ring) -> "LinearVectorField":
        """The Euler field sum_i x_i d_i (identity matrix)."""
        n = len(ring)
        return LinearVectorField(ring, [[Fraction(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(ring: Ring) -> "LinearVectorField":
        n = len(ring)
        return LinearVectorField(ring, [[Fraction(0)] * n for _ in range(n)])

    @staticmethod
    def from_coefficients(ring: Ring, coeffs: list[MPoly]) -> "LinearVectorField":
        """Build from the linear forms (delta(x_1), ..., delta(x_n))."""
        n = len(ring)
        if len(coeffs) != n:
            raise ValueError("need one coefficient form per variable")
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for j, f in enumerate(coeffs):
            if f.ring != tuple(ring):
                raise ValueError("coefficient ring mismatch")
            for e, c in f.terms.items():
                if sum(e) != 1:
                    raise ValueError(f"coefficient of d_{j} is not a linear form: {f}")
                matrix[e.index(1)][j] = c
        return LinearVectorField(ring, matrix)

    # -- basic queries ---------------------------------------------------

    def coefficient(self, j: int) -> MPoly:
        """The linear form delta(x_j)."""
        terms = {}
        n = len(self.ring)
        for i in range(n):
            c = self.matrix[i][j]
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return MPoly(self.ring, terms)

    def coefficients(self) -> list[MPoly]:
        return [self.coefficient(j) for j in range(len(self.ring))]

    def is_zero(self) -> bool:
        return all(not c for row in self.matrix for c in row)

    def vectorize(self) -> list[Fraction]:
        return [c for row in self.matrix for c in row]

    def value_at(self, point: list[Fraction]) -> list[Fraction]:
        """The vector (delta(x_1)(p), ..., delta(x_n)(p))."""
        n = len(self.ring)
        pt = [Fraction(x) for x in point]
        return [sum((pt[i] * self.matrix[i][j] for i in range(n)), Fraction(0)) for j in range(n)]

    # -- algebra -----------------------------------------------------------

    def apply(self, f: MPoly) -> MPoly:
        if f.ring != self.ring:
            raise ValueError("field and polynomial rings differ")
        out = MPoly.zero(self.ring)
        for j in range(len(self.ring)):
            dj = f.diff(j)
            if not dj.is_zero():
                out = out + self.coefficient(j) * dj
        return out

    def __add__(self, other: "LinearVectorField") -> "LinearVectorField":
        return LinearVectorField(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.matrix, other.matrix)],
        )

    def __sub__(self, other: "LinearVectorField") -> "LinearVectorField":
        return self + other.scale(-1)

    def scale(self, c) -> "LinearVectorField":
        c = Fraction(c)
        return LinearVectorField(self.ring, [[c * a for a in row] for row in self.matrix])

    def primitive(self) -> "LinearVectorField":
        """Scale by the positive rational making entries coprime integers."""
        den = 1
        for row in self.matrix:
            for c in row:
                den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for row in self.matrix:
            for c in row:
                num = gcd(num, c.numerator * den // c.denominator)
        if num == 0:
            return self
        return self.scale(Fraction(den, num))

    def __eq__(self, other):
        if not isinstance(other, LinearVectorField):
            return NotImplemented
        return self.ring == other.ring and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.ring, self.matrix))

    def __repr__(self):
        parts = []
        for j, f in enumerate(self.coefficients()):
            if not f.is_zero():
                parts.append(f"({f})*d_{self.ring[j]}")
        return " + ".join(parts) if parts else "0"


def apply_to_poly(v: LinearVectorField, f: MPoly) -> MPoly:
    """Apply the field to a polynomial: sum_j delta(x_j) * d_j(f)."""
    return v.apply(f)


def bracket(u: LinearVectorField, v: LinearVectorField) -> LinearVectorField:
    """Lie bracket [u, v]; equals the matrix commutator under xA d^t.

    With delta_A(x_j) = sum_i x_i A[i][j] one computes
    delta_A(delta_B(x_j)) = sum_k (AB)[k][j] x_k, so [delta_A, delta_B]
    corresponds to AB - BA; validated against apply_to_poly in the tests.
    """
    if u.ring != v.ring:
        raise ValueError("fields live on different spaces")
    a, b = u.matrix, v.matrix
    n = len(u.ring)
    ab = [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    ba = [[sum((b[i][k] * a[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    return LinearVectorField(u.ring, [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)])


@dataclass(frozen=True)
class VectorFieldBasis:
    """n candidate basis fields on an n-dimensional space."""

    ring: Ring
    fields: tuple[LinearVectorField, ...]

    def __init__(self, ring: Ring, fields):
        ring = tuple(ring)
        fields = tuple(fields)
        if len(fields) != len(ring):
            raise ValueError("need exactly one field per ambient dimension")
        for f in fields:
            if f.ring != ring:
                raise ValueError("field ring mismatch")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "fields", fields)

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring),
            "fields": [[[str(c) for c in row] for row in f.matrix] for f in self.fields],
        }

    @staticmethod
    def from_json(data: dict) -> "VectorFieldBasis":
        ring = tuple(data["variables"])
        fields = [LinearVectorField(ring, m) for m in data["fields"]]
        return VectorFieldBasis(ring, fields)


@dataclass(frozen=True)
class LFDReport:
    """Outcome of the Saito-criterion verification of a basis."""

    discriminant: MPoly
    reduced: Squarefreeness
    closed_under_bracket: bool
    log_eigenvalues: tuple[Fraction | None, ...]
    euler_in_span: bool
    is_lfd: bool

    def to_json(self) -> dict:
        return {
            "discriminant": self.discriminant.to_text(),
            "reduced": self.reduced.value,
            "closed_under_bracket": self.closed_under_bracket,
            "log_eigenvalues": [None if c is None else str(c) for c in self.log_eigenvalues],
            "euler_in_span": self.euler_in_span,
            "is_lfd": self.is_lfd,
        }


def discriminant_determinant(b: VectorFieldBasis) -> MPoly:
    """det(delta_i(x_j)); vanishes identically iff there is no open orbit."""
    rows = [f.coefficients() for f in b.fields]
    return poly_det(PolyMatrix.from_rows(rows))


def is_logarithmic(v: LinearVectorField, delta: MPoly) -> Fraction | None:
    """The constant c with v(delta) = c * delta, or None."""
    if delta.is_zero():
        raise ValueError("logarithmic membership needs a nonzero equation")
    return is_scalar_multiple(v.apply(delta), delta)


def verify_lfd(
    b: VectorFieldBasis,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> LFDReport:
    """Run Saito's criterion on the basis; failures land in the report.

    The divisor is linear free iff the coefficient determinant is nonzero
    and squarefree and every basis field is logarithmic for it.  Bracket
    closure and the presence of the Euler field in the rational span are
    reported as corroborating structure (a rational vector lying in the
    C-span of rational vectors already lies in their Q-span).
    """
    delta = discriminant_determinant(b)
    span = SpanSolver([f.vectorize() for f in b.fields])
    closed = all(
        span.contains(bracket(u, v).vectorize())
        for i, u in enumerate(b.fields)
        for v in b.fields[i + 1 :]
    )
    euler_in_span = span.contains(LinearVectorField.euler(b.ring).vectorize())
    if delta.is_zero():
        return LFDReport(
            discriminant=delta,
            reduced=Squarefreeness.INCONCLUSIVE,
            closed_under_bracket=closed,
            log_eigenvalues=(None,) * len(b.fields),
            euler_in_span=euler_in_span,
            is_lfd=False,
        )
    eigen = tuple(is_logarithmic(f, delta) for f in b.fields)
    reduced = squarefree_test(delta, trials, seed)
    is_lfd = reduced is Squarefreeness.SQUAREFREE and all(c is not None for c in eigen)
    return LFDReport(
        discriminant=delta,
        reduced=reduced,
        closed_under_bracket=closed,
        log_eigenvalues=eigen,
        euler_in_span=euler_in_span,
        is_lfd=is_lfd,
    )


def annihilator_split(
    b: VectorFieldBasis, delta: MPoly
) -> tuple[LinearVectorField, list[LinearVectorField]]:
    """Split a verified basis into the Euler field and annihilators of delta.

    Each delta_i with delta_i(delta) = c_i * delta is replaced by
    delta_i - (c_i/n) * chi, which kills delta exactly; a maximal
    independent subset (n-1 fields, scaled to primitive integer matrices)
    is returned together with chi.
    """
    n = len(b.ring)
    chi = LinearVectorField.euler(b.ring)
    span = SpanSolver([f.vectorize() for f in b.fields])
    if not span.contains(chi.vectorize()):
        raise ValueError("Euler field not in the span: input is not an LFD basis")
    annihilators: list[LinearVectorField] = []
    picker = RankTracker(n * n)
    for f in b.fields:
        c = is_logarithmic(f, delta)
        if c is None:
            raise ValueError("basis field is not logarithmic for delta")
        eta = (f - chi.scale(Fraction(c, n))).primitive()
        if eta.is_zero():
            continue
        if not eta.apply(delta).is_zero():
            raise ValueError("annihilator candidate fails to kill delta")
        if picker.add(eta.vectorize()):
            annihilators.append(eta)
    if len(annihilators) != n - 1:
        raise ValueError(
            f"annihilator has rank {len(annihilators)}, expected {n - 1}: input is not an LFD basis"
        )
    return chi, annihilators


def euler_field_at_point(b: VectorFieldBasis, point: list) -> LinearVectorField | None:
    """A field chi - sum lambda_i * eta_i vanishing at the point, if any.

    The returned field sends the basis discriminant to n times itself and
    has value zero at the point; it exists exactly when chi(p) lies in the
    span of the annihilator values at p.  Returns chi itself at the origin.
    """
    delta = discriminant_determinant(b)
    if delta.is_zero():
        raise ValueError("basis has zero discriminant")
    chi, etas = annihilator_split(b, delta)
    pt = [Fraction(x) for x in point]
    target = chi.value_at(pt)
    columns = [eta.value_at(pt) for eta in etas]
    n = len(b.ring)
    a = [[columns[k][j] for k in range(len(etas))] for j in range(n)]
    lam = solve(a, target)
    if lam is None:
        return None
    out = chi
    for coeff, eta in zip(lam, etas):
        out = out - eta.scale(coeff)
    return out
