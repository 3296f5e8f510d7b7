"""Free divisors from incomplete collections of maximal minors.

For m x n generic matrices with n > m + 1 the product of all maximal
minors has too high a degree to be free, but certain collections of
exactly n of them work.  The collection is governed by an auxiliary
quiver on the column set: its arrow set must have size mn - m^2 + 1
(loops included), contain every loop, and be transitively closed.  A
minor is admissible when for every non-loop arrow (i, j) it either
contains column i or omits column j; admissible minors are exactly those
whose zero divisor survives the elementary column operation adding a
multiple of column i to column j.

The verdict logic: more than n admissible minors forces the discriminant
determinant to vanish identically; fewer than n makes a reduced equation
of degree mn impossible; exactly n is decided by certifying the
determinant nonzero at random rational points, falling back to the
symbolic determinant before ever accepting a zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import DEFAULT_SEED, DEFAULT_TRIALS, SAMPLE_BOUND
from .linalg import determinant
from .logder import LinearVectorField, VectorFieldBasis
from .mpoly import MPoly, PolyMatrix, Squarefreeness, evaluate, poly_det, squarefree_test

# Symbolic determinants are affordable at this size; used to confirm
# the fewer-than-n verdict by an explicit squarefreeness failure.
SYMBOLIC_LIMIT = 10


@dataclass(frozen=True)
class AuxQuiver:
    """Column quiver (i, j) on {1..n}; loops are implicit, never stored."""

    m: int
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __init__(self, m: int, n: int, arrows):
        if m < 1 or n <= m:
            raise ValueError("need 1 <= m < n")
        seen = []
        for i, j in arrows:
            i, j = int(i), int(j)
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"arrow ({i}, {j}) leaves the column range 1..{n}")
            if i != j and (i, j) not in seen:
                seen.append((i, j))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arrows", tuple(seen))

    @property
    def q1_size(self) -> int:
        return self.n + len(self.arrows)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "arrows": [list(a) for a in self.arrows]}

    @staticmethod
    def from_json(data: dict) -> "AuxQuiver":
        return AuxQuiver(data["m"], data["n"], [tuple(a) for a in data["arrows"]])


@dataclass(frozen=True)
class MinorCollection:
    """Set of m-element column subsets, each naming one maximal minor."""

    subsets: tuple[tuple[int, ...], ...]

    def __init__(self, subsets):
        clean = sorted({tuple(sorted(int(c) for c in s)) for s in subsets})
        object.__setattr__(self, "subsets", tuple(clean))

    def labels(self) -> list[str]:
        return ["M" + "".join(str(c) for c in s) for s in self.subsets]

    def __len__(self):
        return len(self.subsets)


def validate_aux_quiver(a: AuxQuiver) -> tuple[bool, list[str]]:
    """Check the three structural conditions; diagnostics name violations."""
    diagnostics = []
    expected = a.m * a.n - a.m * a.m + 1
    if a.q1_size != expected:
        diagnostics.append(
            f"arrow set (loops included) has size {a.q1_size}, needs {expected}"
        )
    arrow_set = set(a.arrows)
    for i, j in a.arrows:
        for k, l in a.arrows:
            if j == k and i != l and (i, l) not in arrow_set:
                diagnostics.append(f"transitivity fails: ({i},{j}) and ({k},{l}) need ({i},{l})")
    return (not diagnostics, diagnostics)


def has_oriented_loops(a: AuxQuiver) -> bool:
    """Directed cycle among the non-loop arrows."""
    adjacency: dict[int, list[int]] = {}
    for i, j in a.arrows:
        adjacency.setdefault(i, []).append(j)
    state: dict[int, int] = {}

    def visit(v: int) -> bool:
        state[v] = 1
        for w in adjacency.get(v, []):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state.get(v, 0) == 0 and visit(v) for v in adjacency)


def admissible_minors(a: AuxQuiver) -> MinorCollection:
    """m-subsets S with: for every arrow (i, j), i in S or j not in S."""
    ok, diagnostics = validate_aux_quiver(a)
    if not ok:
        raise ValueError("invalid auxiliary quiver: " + "; ".join(diagnostics))
    subsets = []
    for s in combinations(range(1, a.n + 1), a.m):
        chosen = set(s)
        if all(i in chosen or j not in chosen for i, j in a.arrows):
            subsets.append(s)
    return MinorCollection(subsets)


def matrix_ring(m: int, n: int) -> tuple[str, ...]:
    return tuple(f"x{r}_{c}" for r in range(1, m + 1) for c in range(1, n + 1))


def _var(ring, m: int, n: int, r: int, c: int) -> int:
    return (r - 1) * n + (c - 1)


def group_basis(a: AuxQuiver) -> VectorFieldBasis:
    """mn fields: traceless left multiplications plus the column group.

    Left factor: off-diagonal E_rs and consecutive diagonal differences of
    the m x m algebra (the quotient by the scalar kernel keeps only its
    traceless part).  Right factor: one diagonal unit per column and one
    elementary generator per non-loop arrow, acting with a minus sign.
    """
    m, n = a.m, a.n
    ring = matrix_ring(m, n)
    size = m * n

    def left_field(r: int, s: int) -> LinearVectorField:
        matrix = [[Fraction(0)] * size for _ in range(size)]
        for c in range(1, n + 1):
            matrix[_var(ring, m, n, s, c)][_var(ring, m, n, r, c)] += 1
        return LinearVectorField(ring, matrix)

    def right_field(i: int, j: int) -> LinearVectorField:
        matrix = [[Fraction(0)] * size for _ in range(size)]
        for r in range(1, m + 1):
            matrix[_var(ring, m, n, r, i)][_var(ring, m, n, r, j)] -= 1
        return LinearVectorField(ring, matrix)

    fields: list[LinearVectorField] = []
    for r in range(1, m + 1):
        for s in range(1, m + 1):
            if r != s:
                fields.append(left_field(r, s))
    for i in range(1, m):
        fields.append(left_field(i, i) - left_field(i + 1, i + 1))
    for i in range(1, n + 1):
        fields.append(right_field(i, i))
    for i, j in a.arrows:
        fields.append(right_field(i, j))
    return VectorFieldBasis(ring, fields)


def minor_product(a: AuxQuiver, collection: MinorCollection) -> MPoly:
    """Product of the determinants of the collection's minors."""
    ring = matrix_ring(a.m, a.n)
    product = MPoly.constant(ring, 1)
    for s in collection.subsets:
        entries = [
            MPoly.variable(ring, _var(ring, a.m, a.n, r, c))
            for r in range(1, a.m + 1)
            for c in s
        ]
        product = product * poly_det(PolyMatrix(a.m, a.m, entries))
    return product


@dataclass(frozen=True)
class MinorFamilyReport:
    admissible: MinorCollection
    verdict: bool
    reason: str
    loop_free: bool
    confirmed: bool | None = None

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible.labels(),
            "verdict": "Yes" if self.verdict else "No",
            "reason": self.reason,
            "loop_free": self.loop_free,
            "confirmed": self.confirmed,
        }


def minor_family_report(
    a: AuxQuiver,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> MinorFamilyReport:
    """Decide whether the admissible collection yields a linear free divisor.

    A zero determinant evaluation is never accepted as a No on its own:
    after the random-point budget runs out the symbolic determinant
    settles it.  The loop-free flag annotates the comparison-theorem
    status; it does not change the verdict.
    """
    collection = admissible_minors(a)
    loop_free = not has_oriented_loops(a)
    count = len(collection)
    if count > a.n:
        return MinorFamilyReport(collection, False, "identically zero", loop_free)
    if count < a.n:
        confirmed = None
        if a.m * a.n <= SYMBOLIC_LIMIT:
            delta = poly_det(_coefficient_matrix(a))
            confirmed = delta.is_zero() or (
                squarefree_test(delta, trials, seed) is Squarefreeness.NOT_SQUAREFREE
            )
        return MinorFamilyReport(collection, False, "non-reduced or zero", loop_free, confirmed)
    matrix = _coefficient_matrix(a)
    rng = random.Random(seed)
    size = matrix.rows
    for _ in range(max(1, trials)):
        point = [Fraction(rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND)) for _ in range(len(matrix.ring))]
        value = determinant(
            [[evaluate(matrix.entry(i, j), point) for j in range(size)] for i in range(size)]
        )
        if value:
            return MinorFamilyReport(collection, True, "nonzero discriminant", loop_free)
    delta = poly_det(matrix)
    if delta.is_zero():
        return MinorFamilyReport(collection, False, "identically zero", loop_free)
    return MinorFamilyReport(collection, True, "nonzero discriminant (symbolic)", loop_free)


def _coefficient_matrix(a: AuxQuiver) -> PolyMatrix:
    basis = group_basis(a)
    return PolyMatrix.from_rows([f.coefficients() for f in basis.fields])


def symbolic_discriminant(a: AuxQuiver) -> MPoly:
    """Full symbolic determinant of the group coefficient matrix."""
    return poly_det(_coefficient_matrix(a))
