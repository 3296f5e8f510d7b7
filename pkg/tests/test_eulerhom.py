import time
from fractions import Fraction

import pytest

from lfd.catalog import entries, get_entry, load_basis, witness_terms
from lfd.eulerhom import (
    WitnessTerm,
    build_saito_pair,
    gradient_minor_identity,
    strong_euler_check,
    stratum_ideal,
    sym_basis,
    sym_minor_product,
    symn_catalog_check,
    verify_lqh_witness,
)
from lfd.groebner import Ideal, ideal_equal_radical
from lfd.logder import LinearVectorField, VectorFieldBasis
from lfd.mpoly import MPoly, parse_poly

RING2 = ("x", "y")


def basis(ring, rows):
    fields = [
        LinearVectorField.from_coefficients(ring, [parse_poly(t, ring) for t in row])
        for row in rows
    ]
    return VectorFieldBasis(ring, fields)


NORMAL_CROSSING_2 = basis(RING2, [["x", "0"], ["0", "y"]])

TABLE88_IDS = [f"table88-row{i}" for i in range(1, 10)]


def test_saito_pair_normal_crossing():
    pair = build_saito_pair(NORMAL_CROSSING_2)
    assert pair.s.row(0) == [parse_poly("x", RING2), parse_poly("y", RING2)]
    assert pair.s.row(1) == [parse_poly("x", RING2), parse_poly("-y", RING2)]
    assert pair.delta == parse_poly("-2*x*y", RING2)
    assert pair.t.rows == 1


def test_saito_pair_table88():
    from lfd.mpoly import is_scalar_multiple

    for entry_id in TABLE88_IDS:
        entry = get_entry(entry_id)
        pair = build_saito_pair(load_basis(entry))
        expected = parse_poly(entry.expected["delta"], pair.ring)
        assert is_scalar_multiple(pair.delta, expected) not in (None, 0), entry_id


def test_gradient_minor_identity_normal_crossing():
    pair = build_saito_pair(NORMAL_CROSSING_2)
    # delta = -2xy: d_x is -2y, twice the signed 1x1 minor -y.
    assert pair.delta.diff(0) == parse_poly("-2*y", RING2)
    assert gradient_minor_identity(pair)


def test_gradient_minor_identity_table88_and_sym():
    for entry_id in TABLE88_IDS:
        pair = build_saito_pair(load_basis(get_entry(entry_id)))
        assert gradient_minor_identity(pair), entry_id
    for n in (2, 3):
        pair = build_saito_pair(sym_basis(n))
        assert gradient_minor_identity(pair), f"sym-{n}"


def test_stratum_ideals_basic():
    pair = build_saito_pair(NORMAL_CROSSING_2)
    top = stratum_ideal(pair, "S", 1)
    assert top.ideal.generators == (pair.delta,)
    s0 = stratum_ideal(pair, "S", 0)
    t0 = stratum_ideal(pair, "T", 0)
    coords = Ideal(RING2, [parse_poly("x", RING2), parse_poly("y", RING2)])
    assert ideal_equal_radical(s0.ideal, coords)
    assert ideal_equal_radical(t0.ideal, coords)
    with pytest.raises(ValueError):
        stratum_ideal(pair, "T", 1)
    with pytest.raises(ValueError):
        stratum_ideal(pair, "Q", 0)


def test_strong_euler_normal_crossing_3():
    b = basis(("x", "y", "z"), [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]])
    report = strong_euler_check(build_saito_pair(b))
    assert report.per_k == (True, True)
    assert report.verdict is True
    assert not report.budget_exhausted


def test_strong_euler_all_table88_rows():
    start = time.time()
    for entry_id in TABLE88_IDS:
        pair = build_saito_pair(load_basis(get_entry(entry_id)))
        report = strong_euler_check(pair)
        assert report.verdict is True, entry_id
        assert not report.budget_exhausted
    assert time.time() - start < 240


def test_row7_singular_stratum_is_xy_z_w():
    pair = build_saito_pair(load_basis(get_entry("table88-row7")))
    s1 = stratum_ideal(pair, "S", 1)
    ring = pair.ring
    target = Ideal(ring, [parse_poly(t, ring) for t in ("x*y", "z", "w")])
    assert ideal_equal_radical(s1.ideal, target)


def test_witness_euler_field_at_origin():
    ring = RING2
    chi = LinearVectorField.euler(ring)
    one = MPoly.constant(ring, 1)
    delta = parse_poly("x*y", ring)
    ok = verify_lqh_witness(
        [WitnessTerm(field=chi, num=one, den=one)], delta, [0, 0], [1, 1]
    )
    assert ok


def test_witness_cone_times_plane():
    entry = get_entry("table88-row7")
    delta = parse_poly(entry.expected["delta"], ("x", "y", "z", "w"))
    terms, point, eigen = witness_terms("table88-row7", 1)
    assert verify_lqh_witness(terms, delta, point, eigen)
    # second, non-unit parameter value
    terms, point, eigen = witness_terms("table88-row7", Fraction(7, 3))
    assert verify_lqh_witness(terms, delta, point, eigen)


def test_witness_solvable_row():
    entry = get_entry("table88-row8")
    delta = parse_poly(entry.expected["delta"], ("x", "y", "z", "w"))
    terms, point, eigen = witness_terms("table88-row8", 1)
    assert verify_lqh_witness(terms, delta, point, eigen)
    terms, point, eigen = witness_terms("table88-row8", 5)
    assert verify_lqh_witness(terms, delta, point, eigen)


def test_witness_rejects_wrong_spectrum():
    entry = get_entry("table88-row7")
    delta = parse_poly(entry.expected["delta"], ("x", "y", "z", "w"))
    terms, point, _ = witness_terms("table88-row7", 1)
    assert not verify_lqh_witness(terms, point=point, delta=delta, expected_eigenvalues=[1, 1, 2, 3])


def test_witness_rejects_vanishing_denominator():
    ring = RING2
    chi = LinearVectorField.euler(ring)
    one = MPoly.constant(ring, 1)
    with pytest.raises(ValueError):
        verify_lqh_witness(
            [WitnessTerm(field=chi, num=one, den=parse_poly("x", ring))],
            parse_poly("x*y", ring),
            [0, 0],
            [1, 1],
        )


def test_witness_positivity_required():
    ring = RING2
    chi = LinearVectorField.euler(ring)
    one = MPoly.constant(ring, 1)
    with pytest.raises(ValueError):
        verify_lqh_witness(
            [WitnessTerm(field=chi, num=one, den=one)], parse_poly("x*y", ring), [0, 0], [1, -1]
        )


def test_sym2_catalog_check():
    report = symn_catalog_check(2, trials=6, seed=3)
    assert report.passed
    assert report.lfd.is_lfd
    # the divisor is the cone x11*x22 = x12^2 together with a tangent plane
    prod = sym_minor_product(2)
    assert prod == parse_poly("x11^2*x22 - x11*x12^2", prod.ring)


def test_sym3_catalog_check():
    report = symn_catalog_check(3, trials=6, seed=3)
    assert report.passed
    assert report.lfd.discriminant.total_degree() == 6


def test_strong_euler_sym_cases():
    pair2 = build_saito_pair(sym_basis(2))
    report = strong_euler_check(pair2)
    assert report.verdict is True
