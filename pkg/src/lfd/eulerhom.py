"""Strong Euler homogeneity and local quasihomogeneity diagnostics.

From a verified basis the coefficient matrix S (Euler row on top,
annihilator rows below) and its annihilator part T are assembled; the
divisor equation is det(S) exactly.  The variety cut out by the
(k+1) x (k+1) minors of S collects the points where the logarithmic
fields span at most a k-dimensional tangent space, and the divisor is
strongly Euler homogeneous precisely when the S- and T-strata agree up
to radical for all k <= n-2.  Two structural facts double as bug
detectors: the gradient of det(S) equals the ambient dimension times the
signed maximal minors of T, and the k = 0 strata always coincide.

Local quasihomogeneity witnesses are verified, not searched for: given a
combination of fields with rational-function coefficients, the module
certifies it is logarithmic as a germ, vanishes at the point, and has the
expected strictly positive spectrum in degree zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import DEFAULT_SEED, DEFAULT_TRIALS
from .groebner import BudgetExceededError, GroebnerBudget, Ideal, ideal_equal_radical
from .logder import (
    LFDReport,
    LinearVectorField,
    VectorFieldBasis,
    annihilator_split,
    discriminant_determinant,
    is_logarithmic,
    verify_lfd,
)
from .mpoly import (
    MPoly,
    PolyMatrix,
    all_minors,
    divide_exact,
    evaluate,
    is_scalar_multiple,
    poly_det,
)

MAX_STRATUM_DIMENSION = 4


@dataclass(frozen=True)
class SaitoPair:
    """S = (coordinate row; annihilator rows), T = annihilator rows only."""

    s: PolyMatrix
    t: PolyMatrix
    delta: MPoly

    @property
    def ring(self):
        return self.s.ring

    @property
    def dim(self) -> int:
        return self.s.cols


def build_saito_pair(b: VectorFieldBasis) -> SaitoPair:
    """Assemble S and T from a verified basis; delta is det(S) exactly."""
    base_delta = discriminant_determinant(b)
    if base_delta.is_zero():
        raise ValueError("basis has zero discriminant")
    chi, annihilators = annihilator_split(b, base_delta)
    rows = [chi.coefficients()] + [eta.coefficients() for eta in annihilators]
    s = PolyMatrix.from_rows(rows)
    t = PolyMatrix.from_rows(rows[1:]) if len(rows) > 1 else PolyMatrix(0, s.cols, [])
    delta = poly_det(s)
    if is_scalar_multiple(delta, base_delta) in (None, 0):
        raise AssertionError("det(S) is not a scalar multiple of the basis discriminant")
    for eta in annihilators:
        if not eta.apply(delta).is_zero():
            raise AssertionError("annihilator row fails to kill det(S)")
    return SaitoPair(s=s, t=t, delta=delta)


def gradient_minor_identity(p: SaitoPair) -> bool:
    """Check d_k(delta) = n * (-1)^(k+1) * det(T minus column k) for all k."""
    n = p.dim
    for k in range(n):
        if n == 1:
            minor = MPoly.constant(p.ring, 1)
        else:
            cols = [j for j in range(n) if j != k]
            minor = poly_det(p.t.submatrix(list(range(n - 1)), cols))
        sign = 1 if k % 2 == 0 else -1
        if p.delta.diff(k) != minor * (sign * n):
            return False
    return True


@dataclass(frozen=True)
class StratumIdeal:
    source: str
    k: int
    ideal: Ideal


def stratum_ideal(p: SaitoPair, source: str, k: int) -> StratumIdeal:
    """All (k+1) x (k+1) minors of S or T, deduplicated, zeros dropped."""
    if source not in ("S", "T"):
        raise ValueError("source must be 'S' or 'T'")
    matrix = p.s if source == "S" else p.t
    limit = p.dim - 1 if source == "S" else p.dim - 2
    if not 0 <= k <= limit:
        raise ValueError(f"stratum level {k} out of range for source {source}")
    gens = all_minors(matrix, k + 1)
    return StratumIdeal(source=source, k=k, ideal=Ideal(p.ring, gens))


@dataclass(frozen=True)
class StrongEulerReport:
    per_k: tuple[bool | None, ...]
    verdict: bool | None
    budget_exhausted: bool

    def to_json(self) -> dict:
        return {
            "per_k": list(self.per_k),
            "verdict": self.verdict,
            "budget_exhausted": self.budget_exhausted,
        }


def strong_euler_check(
    p: SaitoPair, budget: GroebnerBudget | None = None
) -> StrongEulerReport:
    """Radical equality of the S- and T-strata for every k up to n-2.

    Every level is verified computationally (the k = 0 and k = n-2 levels
    are theorems for genuine free divisor bases, so a failure there flags
    an assembly bug rather than a property of the divisor).  If the
    Groebner budget runs out the report carries the partial results.
    """
    n = p.dim
    if n > MAX_STRATUM_DIMENSION:
        raise ValueError(f"stratum comparison supported up to dimension {MAX_STRATUM_DIMENSION}")
    if budget is None:
        budget = GroebnerBudget()
    results: list[bool | None] = []
    for k in range(n - 1):
        sk = stratum_ideal(p, "S", k)
        tk = stratum_ideal(p, "T", k)
        try:
            results.append(ideal_equal_radical(sk.ideal, tk.ideal, budget))
        except BudgetExceededError:
            results.extend([None] * (n - 1 - k))
            return StrongEulerReport(per_k=tuple(results), verdict=None, budget_exhausted=True)
    verdict = all(r is True for r in results) if results else True
    return StrongEulerReport(per_k=tuple(results), verdict=verdict, budget_exhausted=False)


@dataclass(frozen=True)
class WitnessTerm:
    """One summand coeff * field with coeff = num/den, den(p) != 0."""

    field: LinearVectorField
    num: MPoly
    den: MPoly


def verify_lqh_witness(
    terms: list[WitnessTerm],
    delta: MPoly,
    point: list,
    expected_eigenvalues: list,
) -> bool:
    """Certify a local quasihomogeneity witness at a point of the divisor.

    The combined field v = sum (num_i/den_i) * field_i must (1) send delta
    to (polynomial/common-denominator) * delta, checked by exact division
    after clearing denominators, (2) vanish at the point, and (3) have a
    degree-zero part whose characteristic polynomial is the product of
    (lambda - e) over the expected eigenvalues, all of which must be
    strictly positive.
    """
    if not terms:
        raise ValueError("witness needs at least one term")
    ring = delta.ring
    expected = [Fraction(e) for e in expected_eigenvalues]
    if any(e <= 0 for e in expected):
        raise ValueError("expected eigenvalues must be strictly positive")
    pt = [Fraction(x) for x in point]
    n = len(ring)
    if len(expected) != n:
        raise ValueError("need one expected eigenvalue per ambient dimension")
    common = MPoly.constant(ring, 1)
    for term in terms:
        if term.den.is_zero():
            raise ValueError("witness coefficient has zero denominator")
        if evaluate(term.den, pt) == 0:
            raise ValueError("witness denominator vanishes at the point")
        common = common * term.den

    def cleared(i: int) -> MPoly:
        factor = divide_exact(common, terms[i].den)
        assert factor is not None
        return terms[i].num * factor

    # (1) logarithmic germ certificate
    applied = MPoly.zero(ring)
    for i, term in enumerate(terms):
        applied = applied + cleared(i) * term.field.apply(delta)
    if divide_exact(applied, delta) is None:
        return False
    # numerators of the combined field's coefficients over `common`
    numerators = []
    for j in range(n):
        nj = MPoly.zero(ring)
        for i, term in enumerate(terms):
            nj = nj + cleared(i) * term.field.coefficient(j)
        numerators.append(nj)
    # (2) vanishing at the point
    if any(evaluate(nj, pt) != 0 for nj in numerators):
        return False
    # (3) spectrum of the degree-zero part: Jacobian of the coefficient
    # vector at the point (the numerator Jacobian over common(p), since
    # the numerators vanish there).
    d_at_p = evaluate(common, pt)
    jac = [[evaluate(numerators[j].diff(l), pt) / d_at_p for l in range(n)] for j in range(n)]
    lam_ring = ("lam",)
    lam = MPoly.variable(lam_ring, 0)
    entries = []
    for a in range(n):
        for b in range(n):
            e = MPoly.constant(lam_ring, -jac[a][b])
            if a == b:
                e = e + lam
            entries.append(e)
    char_poly = poly_det(PolyMatrix(n, n, entries))
    target = MPoly.constant(lam_ring, 1)
    for e in expected:
        target = target * (lam - MPoly.constant(lam_ring, e))
    return char_poly == target


# -- symmetric matrix catalogue ---------------------------------------------


def sym_ring(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}{j}" for i in range(1, n + 1) for j in range(i, n + 1))


def _sym_index(n: int, a: int, b: int) -> int:
    i, j = min(a, b), max(a, b)
    # offset of row block i, then position of j within it
    return (i - 1) * n - (i - 1) * (i - 2) // 2 + (j - i)


def sym_field(n: int, i: int, j: int) -> LinearVectorField:
    """Action of the elementary triangular generator E_ij on symmetric matrices.

    The transposed-conjugation action sends a symmetric S to E_ji S + S E_ij,
    which writes row/column i data into row/column j, doubling the (j, j)
    slot.
    """
    if not 1 <= i <= j <= n:
        raise ValueError("need 1 <= i <= j <= n")
    ring = sym_ring(n)
    size = len(ring)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, n + 1):
        for l in range(k, n + 1):
            # coefficient of d_(k,l) is  delta_{k,j} x_(i,l) + delta_{l,j} x_(k,i)
            target = _sym_index(n, k, l)
            if k == j:
                matrix[_sym_index(n, i, l)][target] += 1
            if l == j:
                matrix[_sym_index(n, k, i)][target] += 1
    return LinearVectorField(ring, matrix)


def sym_basis(n: int) -> VectorFieldBasis:
    ring = sym_ring(n)
    fields = [sym_field(n, i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return VectorFieldBasis(ring, fields)


def sym_minor_product(n: int) -> MPoly:
    """Product of the upper-left k x k determinants, k = 1..n."""
    ring = sym_ring(n)
    product = MPoly.constant(ring, 1)
    for k in range(1, n + 1):
        entries = [
            MPoly.variable(ring, _sym_index(n, a, b))
            for a in range(1, k + 1)
            for b in range(1, k + 1)
        ]
        product = product * poly_det(PolyMatrix(k, k, entries))
    return product


@dataclass(frozen=True)
class SymReport:
    n: int
    lfd: LFDReport
    delta_matches_minor_product: bool
    eigenvalues_ok: bool
    passed: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lfd": self.lfd.to_json(),
            "delta_matches_minor_product": self.delta_matches_minor_product,
            "eigenvalues_ok": self.eigenvalues_ok,
            "passed": self.passed,
        }


def symn_catalog_check(
    n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED
) -> SymReport:
    """Verify the triangular-group action on symmetric n x n matrices.

    The discriminant must be a scalar multiple of the product of leading
    principal minors, the diagonal generators must scale it by 2(n-i+1),
    and the strictly triangular ones must kill it.
    """
    if n not in (2, 3):
        raise ValueError("symmetric catalogue covers n = 2 and n = 3")
    basis = sym_basis(n)
    report = verify_lfd(basis, trials, seed)
    delta = report.discriminant
    matches = is_scalar_multiple(delta, sym_minor_product(n)) not in (None, 0)
    eigen_ok = True
    idx = 0
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            expected = Fraction(2 * (n - i + 1)) if i == j else Fraction(0)
            if is_logarithmic(basis.fields[idx], delta) != expected:
                eigen_ok = False
            idx += 1
    return SymReport(
        n=n,
        lfd=report,
        delta_matches_minor_product=matches,
        eigenvalues_ok=eigen_ok,
        passed=report.is_lfd and matches and eigen_ok,
    )
