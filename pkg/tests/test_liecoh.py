import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from lfd.liecoh import (
    CEComplex,
    GroupTypeDecomp,
    LiePresentation,
    betti_number,
    ce_differential,
    glct_check,
    group_poincare,
    is_reductive,
    lie_betti,
    structure_constants,
)
from lfd.logder import LinearVectorField, VectorFieldBasis
from lfd.mpoly import parse_poly


def upper_triangular_basis(n):
    """Elementary matrices E_ij (i <= j) spanning the triangular algebra."""
    mats = []
    for i in range(n):
        for j in range(i, n):
            m = [[Fraction(0)] * n for _ in range(n)]
            m[i][j] = Fraction(1)
            mats.append(m)
    return mats


def gl_basis(n):
    mats = []
    for i in range(n):
        for j in range(n):
            m = [[Fraction(0)] * n for _ in range(n)]
            m[i][j] = Fraction(1)
            mats.append(m)
    return mats


def abelian(n):
    return LiePresentation(n, {})


GL2 = LiePresentation.from_matrices(gl_basis(2))
B2 = LiePresentation.from_matrices(upper_triangular_basis(2))
B3 = LiePresentation.from_matrices(upper_triangular_basis(3))


def brute_force_rank(matrix):
    """Independent rank oracle: textbook Gauss-Jordan over Fraction.

    Deliberately separate from the package's fraction-free integer
    elimination; counts pivots of the reduced row echelon form.
    """
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    pivots = 0
    for c in range(ncols):
        pivot_row = None
        for r in range(pivots, nrows):
            if m[r][c]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[pivots], m[pivot_row] = m[pivot_row], m[pivots]
        pv = m[pivots][c]
        m[pivots] = [x / pv for x in m[pivots]]
        for r in range(nrows):
            if r != pivots and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[pivots])]
        pivots += 1
        if pivots == nrows:
            break
    return pivots


def brute_force_ce_matrix(p, k):
    """Differential built from the raw alternating-sum formula.

    Evaluates d(eps_S) on every wedge e_T independently of the production
    code path (no shared sign bookkeeping): for each position pair it
    looks up the bracket and sorts the wedge with an explicit bubble count.
    """
    n = p.dim
    domain = list(combinations(range(n), k))
    codomain = list(combinations(range(n), k + 1))
    out = [[Fraction(0)] * len(domain) for _ in codomain]
    for col, s in enumerate(domain):
        for row, t in enumerate(codomain):
            total = Fraction(0)
            for a in range(k + 1):
                for b in range(a + 1, k + 1):
                    coeffs = p.bracket_coeffs(t[a], t[b])
                    rest = [x for pos, x in enumerate(t) if pos not in (a, b)]
                    for m in range(n):
                        if not coeffs[m]:
                            continue
                        wedge = [m] + rest
                        if len(set(wedge)) != len(wedge):
                            continue
                        # bubble sort, counting swaps
                        swaps = 0
                        w = list(wedge)
                        for x in range(len(w)):
                            for y in range(len(w) - 1 - x):
                                if w[y] > w[y + 1]:
                                    w[y], w[y + 1] = w[y + 1], w[y]
                                    swaps += 1
                        if tuple(w) != s:
                            continue
                        sign = (-1) ** ((a + 1) + (b + 1)) * (-1) ** swaps
                        total += sign * coeffs[m]
            out[row][col] = total
    return out


def test_structure_constants_abelian_basis():
    ring = ("x", "y", "z")
    fields = [
        LinearVectorField.from_coefficients(ring, [parse_poly(t, ring) for t in row])
        for row in [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]]
    ]
    p = structure_constants(VectorFieldBasis(ring, fields))
    assert p.structure == {}


def test_structure_constants_chi_is_central():
    ring = ("x", "y")
    chi = LinearVectorField.euler(ring)
    xdy = LinearVectorField.from_coefficients(ring, [parse_poly("0", ring), parse_poly("x", ring)])
    p = structure_constants(VectorFieldBasis(ring, [chi, xdy]))
    assert p.structure == {}


def test_structure_constants_closure_error():
    ring = ("x", "y")
    xdy = LinearVectorField.from_coefficients(ring, [parse_poly("0", ring), parse_poly("x", ring)])
    ydx = LinearVectorField.from_coefficients(ring, [parse_poly("y", ring), parse_poly("0", ring)])
    with pytest.raises(ValueError):
        structure_constants(VectorFieldBasis(ring, [xdy, ydx]))


def test_gl2_structure_is_gl2():
    # [E11, E12] = E12 and [E12, E21] = E11 - E22 in the chosen basis
    # order (E11, E12, E21, E22).
    assert GL2.bracket_coeffs(0, 1) == (0, 1, 0, 0)
    assert GL2.bracket_coeffs(1, 2) == (1, 0, 0, -1)
    assert GL2.jacobi_holds()


def test_ce_differential_shapes_and_zero_cases():
    for p in [abelian(3), B2, GL2]:
        n = p.dim
        for k in range(n + 1):
            d = ce_differential(p, k)
            assert len(d) == comb(n, k + 1)
            if d:
                assert len(d[0]) == comb(n, k)
    assert all(not any(row) for row in ce_differential(abelian(4), 2))
    # k = n maps to the zero space
    assert ce_differential(B2, 3) == []


def test_ce_differential_matches_brute_force():
    for p in [B2, GL2, B3]:
        for k in range(p.dim):
            assert ce_differential(p, k) == brute_force_ce_matrix(p, k)


def test_d_compose_d_zero_and_complex_build():
    for p in [abelian(2), B2, GL2, B3]:
        CEComplex.build(p)  # raises if d o d != 0


def test_lie_betti_abelian_binomials():
    for n in range(1, 7):
        assert list(lie_betti(abelian(n))) == [comb(n, k) for k in range(n + 1)]


def test_lie_betti_gl2():
    # H(gl_2) = H(scalars) (x) H(sl_2): Poincare (1+t)(1+t^3) = degrees 0,1,3,4.
    assert list(lie_betti(GL2)) == [1, 1, 0, 1, 1]


def test_lie_betti_b2():
    assert list(lie_betti(B2)) == [1, 2, 1, 0]


def test_lie_betti_b3_with_independent_oracle():
    # (1+t)^3 padded: the triangular group retracts onto its rank-3 torus.
    expected = [1, 3, 3, 1, 0, 0, 0]
    assert list(lie_betti(B3)) == expected
    ranks = [brute_force_rank(brute_force_ce_matrix(B3, k)) for k in range(6)] + [0]
    oracle = [comb(6, k) - ranks[k] - (ranks[k - 1] if k else 0) for k in range(7)]
    assert oracle == expected


def test_betti_number_matches_full_vector():
    for p in [abelian(3), B2, GL2]:
        full = list(lie_betti(p))
        for k in range(p.dim + 1):
            assert betti_number(p, k) == full[k]


def test_euler_characteristic_zero():
    for p in [B2, GL2, B3, abelian(4)]:
        chi = sum((-1) ** k * b for k, b in enumerate(lie_betti(p)))
        assert chi == 0


def test_betti_invariant_under_basis_change():
    rng = random.Random(21)
    for p in [B2, GL2]:
        n = p.dim
        while True:
            m = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            try:
                q = p.change_basis(m)
                break
            except ValueError:
                continue
        assert q.jacobi_holds()
        assert list(lie_betti(q)) == list(lie_betti(p))


def test_is_reductive():
    assert is_reductive(abelian(5)) is True
    assert is_reductive(GL2) is True
    assert is_reductive(B2) is False
    assert is_reductive(B3) is False
    # sl_2 alone is semisimple, hence reductive
    sl2 = LiePresentation.from_matrices(
        [
            [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]],
            [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]],
            [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]],
        ]
    )
    assert is_reductive(sl2) is True


def test_is_reductive_respects_abelian_summands():
    rng = random.Random(33)
    for p in [B2, GL2]:
        for _ in range(5):
            k = rng.randint(1, 3)
            assert is_reductive(abelian(k).direct_sum(p)) == is_reductive(p)


def test_group_poincare():
    assert group_poincare(GroupTypeDecomp.parse("T:3")) == [1, 3, 3, 1]
    assert group_poincare(GroupTypeDecomp.parse("GL:2")) == [1, 1, 0, 1, 1]
    assert group_poincare(GroupTypeDecomp.parse("B:2")) == [1, 2, 1]
    assert group_poincare(GroupTypeDecomp.parse("SL:2")) == [1, 0, 0, 1]
    assert group_poincare(GroupTypeDecomp.parse("T:1,B:2")) == [1, 3, 3, 1]


def test_glct_normal_crossing_and_gl2():
    ring3 = ("x", "y", "z")
    fields = [
        LinearVectorField.from_coefficients(ring3, [parse_poly(t, ring3) for t in row])
        for row in [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]]
    ]
    report = glct_check(VectorFieldBasis(ring3, fields), GroupTypeDecomp.parse("T:3"))
    assert report.holds

    ring4 = ("x", "y", "z", "w")
    cubics = [
        LinearVectorField.from_coefficients(ring4, [parse_poly(t, ring4) for t in row])
        for row in [
            ["3*x", "2*y", "z", "0"],
            ["0", "3*x", "2*y", "z"],
            ["y", "2*z", "3*w", "0"],
            ["0", "y", "2*z", "3*w"],
        ]
    ]
    report = glct_check(VectorFieldBasis(ring4, cubics), GroupTypeDecomp.parse("GL:2"))
    assert report.holds
    assert list(report.lie_betti) == [1, 1, 0, 1, 1]
    # and a deliberately wrong group type fails
    report = glct_check(VectorFieldBasis(ring4, cubics), GroupTypeDecomp.parse("T:4"))
    assert not report.holds


def test_presentation_json_round_trip():
    data = GL2.to_json()
    assert LiePresentation.from_json(data).structure == GL2.structure
