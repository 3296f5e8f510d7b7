import random
from fractions import Fraction

import pytest

from lfd.mpoly import (
    DEGREVLEX,
    LEX,
    MPoly,
    PolyMatrix,
    Squarefreeness,
    divide_exact,
    evaluate,
    is_scalar_multiple,
    parse_poly,
    partial_derivative,
    poly_det,
    poly_det_cofactor,
    squarefree_test,
)

RING_XY = ("x", "y")
RING_XYZW = ("x", "y", "z", "w")


def p(text, ring=RING_XYZW):
    return parse_poly(text, ring)


def test_parse_and_text_round_trip():
    for text in ["x", "x + y", "3*x^2*y - 1/2*z + 5", "-x*w + 2", "0"]:
        f = p(text)
        assert p(f.to_text()) == f


def test_json_round_trip():
    f = p("3/7*x^2*y - w + 2")
    assert MPoly.from_json(f.to_json()) == f


def test_arithmetic_basics():
    x, y = (MPoly.variable(RING_XY, i) for i in range(2))
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1
    assert x - x == MPoly.zero(RING_XY)


def test_order_keys():
    # degrevlex: x > y; among degree-2 monomials x*y > y^2 but x^2 > x*y.
    terms = [(2, 0), (1, 1), (0, 2), (1, 0)]
    ordered = sorted(terms, key=DEGREVLEX.key, reverse=True)
    assert ordered == [(2, 0), (1, 1), (0, 2), (1, 0)]
    assert LEX.key((1, 0)) > LEX.key((0, 5))


def test_partial_derivative_examples():
    f = p("x^2*y")
    assert partial_derivative(f, 0) == p("2*x*y")
    assert partial_derivative(p("x*z"), 1).is_zero()


def test_partial_derivative_against_term_oracle():
    # Independent oracle: differentiate term by term from the raw dict.
    f = p("-y^2*z^2 + 4*w*y^3 + 4*x*z^3 - 18*w*x*y*z + 27*w^2*x^2")
    var = 3  # w
    oracle = {}
    for e, c in f.terms.items():
        if e[var]:
            d = list(e)
            d[var] -= 1
            oracle[tuple(d)] = c * e[var]
    assert partial_derivative(f, var) == MPoly(RING_XYZW, oracle)
    assert partial_derivative(f, var) == p("4*y^3 - 18*x*y*z + 54*w*x^2")


def test_divide_exact_examples():
    assert divide_exact(p("x^2*y"), p("x")) == p("x*y")
    assert divide_exact(p("x + y"), p("x")) is None
    delta = p("-y^2*z^2 + 4*w*y^3 + 4*x*z^3 - 18*w*x*y*z + 27*w^2*x^2")
    assert divide_exact(delta * p("x"), delta) == p("x")
    with pytest.raises(ZeroDivisionError):
        divide_exact(p("x"), MPoly.zero(RING_XYZW))


def _random_poly(rng, ring, max_deg=3, max_terms=5):
    n = len(ring)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(n)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return MPoly(ring, terms)


def test_divide_exact_round_trip_random():
    rng = random.Random(7)
    for _ in range(80):
        f = _random_poly(rng, RING_XYZW)
        g = _random_poly(rng, RING_XYZW)
        if g.is_zero():
            continue
        assert divide_exact(f * g, g) == f


def test_is_scalar_multiple():
    assert is_scalar_multiple(p("2*x*y"), p("x*y")) == 2
    assert is_scalar_multiple(p("x*y + x"), p("x*y")) is None
    assert is_scalar_multiple(MPoly.zero(RING_XYZW), p("x*y")) == 0
    zero = MPoly.zero(RING_XYZW)
    assert is_scalar_multiple(zero, zero) == 1
    assert is_scalar_multiple(p("x"), zero) is None
    assert is_scalar_multiple(p("-1/3*x + y"), p("x - 3*y")) == Fraction(-1, 3)


def test_evaluate():
    assert evaluate(p("x*y", RING_XY), [2, 3]) == 6
    assert evaluate(p("x", RING_XY) - p("x", RING_XY), [5, 1]) == 0
    delta = p("-y^2*z^2 + 4*w*y^3 + 4*x*z^3 - 18*w*x*y*z + 27*w^2*x^2")
    assert evaluate(delta, [1, 0, 0, 1]) == 27
    with pytest.raises(ValueError):
        evaluate(p("x", RING_XY), [1])


def test_poly_det_small():
    ring = ("x", "y", "z", "w")
    x, y, z, w = (MPoly.variable(ring, i) for i in range(4))
    m = PolyMatrix(2, 2, [x, y, z, w])
    assert poly_det(m) == x * w - y * z
    assert poly_det(PolyMatrix(1, 1, [x])) == x
    with pytest.raises(ValueError):
        poly_det(PolyMatrix(1, 2, [x, y]))


def test_poly_det_binary_cubics():
    # Coefficient matrix of the four partials-times-monomials of a binary
    # cubic; its determinant is 3 times the cubic's discriminant quartic.
    rows = [
        ["3*x", "0", "y", "0"],
        ["2*y", "3*x", "2*z", "y"],
        ["z", "2*y", "3*w", "2*z"],
        ["0", "z", "0", "3*w"],
    ]
    m = PolyMatrix.from_rows([[p(t) for t in row] for row in rows])
    expected = p("-y^2*z^2 + 4*w*y^3 + 4*x*z^3 - 18*w*x*y*z + 27*w^2*x^2") * 3
    assert poly_det(m) == expected
    assert poly_det_cofactor(m) == expected


def test_poly_det_zero_matrix_and_empty():
    ring = RING_XY
    zero = MPoly.zero(ring)
    assert poly_det(PolyMatrix(2, 2, [zero] * 4)).is_zero()
    assert poly_det(PolyMatrix(0, 0, [])) == 1
    x = MPoly.variable(ring, 0)
    # dependent rows
    assert poly_det(PolyMatrix.from_rows([[x, x], [x, x]])).is_zero()


def _random_linear_matrix(rng, ring, n):
    entries = []
    for _ in range(n * n):
        terms = {}
        for i in range(len(ring)):
            c = rng.randint(-4, 4)
            if c:
                e = [0] * len(ring)
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        entries.append(MPoly(ring, terms))
    return PolyMatrix(n, n, entries)


def test_bareiss_equals_cofactor_on_random_linear_4x4():
    rng = random.Random(20080628)
    for _ in range(100):
        m = _random_linear_matrix(rng, RING_XYZW, 4)
        assert poly_det(m) == poly_det_cofactor(m)


def test_evaluate_of_det_equals_numeric_det():
    rng = random.Random(99)
    for _ in range(20):
        m = _random_linear_matrix(rng, RING_XYZW, 3)
        point = [Fraction(rng.randint(-10, 10), rng.randint(1, 7)) for _ in range(4)]
        d = evaluate(poly_det(m), point)
        a = [[evaluate(m.entry(i, j), point) for j in range(3)] for i in range(3)]
        numeric = (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
        assert d == numeric


def test_squarefree_examples():
    assert squarefree_test(p("x^2*y"), 6, seed=1) is Squarefreeness.NOT_SQUAREFREE
    assert squarefree_test(p("x*y*z"), 6, seed=1) is Squarefreeness.SQUAREFREE
    with pytest.raises(ValueError):
        squarefree_test(MPoly.zero(RING_XYZW), 6, seed=1)
    assert squarefree_test(p("5"), 3, seed=1) is Squarefreeness.SQUAREFREE


def test_squarefree_planted_squares():
    rng = random.Random(4242)
    found = 0
    while found < 50:
        f = _random_poly(rng, RING_XYZW, max_deg=3, max_terms=4)
        if f.is_zero() or f.total_degree() == 0:
            continue
        found += 1
        assert squarefree_test(f * f, 6, seed=found) is Squarefreeness.NOT_SQUAREFREE


def test_squarefree_random_products_of_distinct_linears():
    ring = ("x", "y", "z")
    x, y, z = (MPoly.variable(ring, i) for i in range(3))
    f = (x + y) * (x - y) * (x + 2 * z)
    assert squarefree_test(f, 6, seed=3) is Squarefreeness.SQUAREFREE
