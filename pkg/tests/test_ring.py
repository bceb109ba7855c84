"""Ring layer: exact arithmetic, the two quotients, series expansion."""

import itertools
import math

from hypothesis import given, settings, strategies as st

from cyclemotive.ring import (
    LPoly,
    Laurent1,
    MultiSeries,
    Poly2,
    antidiagonal_sums,
    expand_inverse_product,
    format_laurent1,
    format_lpoly,
    format_poly2,
    lpoly_from_diagonal,
    lpoly_to_poly2,
    parse_laurent1,
    parse_lpoly,
    parse_poly2,
    quotient_uv,
    quotient_uv_minus1,
    specialize,
)

# the running example: class of (elliptic curve cone) glued to a plane
GLUED_CONE = parse_poly2("1+u+v+uv-u^2*v-u*v^2+2u^2*v^2")

U = Poly2.monomial(1, 0)
V = Poly2.monomial(0, 1)
ONE = Poly2.one()
UV = Poly2.uv()


def test_product_of_linear_factors():
    assert (ONE + U) * (ONE + V) == parse_poly2("1+u+v+uv")


def test_polynomial_in_uv_minus_one():
    # (uv-1)^2 + 3(uv-1) + 3 collapses to the projective plane class
    t = UV - ONE
    assert t * t + Poly2.constant(3) * t + Poly2.constant(3) == parse_poly2("1+uv+u^2*v^2")


def test_curve_class_times_line():
    curve = ONE - U - V + UV
    assert curve * UV == parse_poly2("uv-u^2*v-u*v^2+u^2*v^2")


def test_quotient_uv_minus1_kills_generator():
    assert quotient_uv_minus1(UV - ONE).is_zero()


def test_quotient_uv_minus1_monomial():
    assert quotient_uv_minus1(Poly2.monomial(2, 1)) == Laurent1({1: 1})


def test_quotient_uv_minus1_glued_cone_value():
    img = quotient_uv_minus1(GLUED_CONE)
    assert img == Laurent1.constant(4)
    # cross-check: evaluation at u=v=1 factors through the quotient
    assert specialize(GLUED_CONE, 1, 1) == 4


def test_quotient_uv_examples():
    assert quotient_uv(UV).is_zero()
    cubed = Poly2.monomial(3, 0)
    assert quotient_uv(cubed) == cubed
    assert quotient_uv(GLUED_CONE) == parse_poly2("1+u+v")


def test_specialize_examples():
    assert specialize(parse_poly2("1+uv+u^2*v^2"), 1, 1) == 3
    assert specialize(UV - ONE, 1, 1) == 0
    assert specialize(ONE - U - V + UV, 1, 1) == 0


def test_antidiagonal_sums_examples():
    assert antidiagonal_sums(parse_poly2("1+uv+u^2*v^2")) == {0: 3}
    assert antidiagonal_sums(UV - ONE) == {}
    assert antidiagonal_sums(ONE - U - V + UV) == {-1: -1, 0: 2, 1: -1}


def test_expand_geometric_square():
    s = expand_inverse_product([((1,), 2)], arity=1, order=3)
    assert s == MultiSeries(1, 3, {(0,): 1, (1,): 2, (2,): 3, (3,): 4})


def test_expand_two_variable_convolution():
    s = expand_inverse_product([((1, 0), 2), ((0, 1), 2)], arity=2, order=4)
    assert s.coefficient((1, 1)) == 4


def stars_and_bars(kinds, total):
    # weak compositions by direct odometer enumeration; exponential, oracle only
    if kinds == 0:
        return 1 if total == 0 else 0
    count = 0
    for parts in itertools.product(range(total + 1), repeat=kinds - 1):
        if sum(parts) <= total:
            count += 1
    return count


def test_expand_sixth_inverse_power_coefficient():
    s = expand_inverse_product([((1,), 6)], arity=1, order=2)
    assert s.coefficient((2,)) == 21
    assert stars_and_bars(6, 2) == 21


def test_expand_matches_binomials_large_grid():
    """Coefficient of t^d in (1-t)^-v is binom(v+d-1, d); the expansion
    route never touches binomials so math.comb is an independent check."""
    for v in range(1, 31):
        s = expand_inverse_product([((1,), v)], arity=1, order=30)
        for d in range(31):
            assert s.coefficient((d,)) == math.comb(v + d - 1, d)


def test_expand_rejects_zero_exponent():
    import pytest

    from cyclemotive.errors import DomainError

    with pytest.raises(DomainError):
        expand_inverse_product([((0, 0), 1)], arity=2, order=3)
    with pytest.raises(DomainError):
        expand_inverse_product([((1,), 0)], arity=1, order=3)


exponent_pairs = st.tuples(st.integers(0, 5), st.integers(0, 5))
small_polys = st.builds(
    Poly2, st.dictionaries(exponent_pairs, st.integers(-9, 9), max_size=6)
)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + Poly2.zero() == a
    assert a * ONE == a
    assert a - a == Poly2.zero()


@given(small_polys, small_polys)
def test_quotients_are_ring_homomorphisms(a, b):
    assert quotient_uv_minus1(a + b) == quotient_uv_minus1(a) + quotient_uv_minus1(b)
    assert quotient_uv_minus1(a * b) == quotient_uv_minus1(a) * quotient_uv_minus1(b)
    assert quotient_uv(a + b) == quotient_uv(quotient_uv(a) + quotient_uv(b))
    assert quotient_uv(a * b) == quotient_uv(quotient_uv(a) * quotient_uv(b))


@given(small_polys)
def test_three_routes_to_the_euler_number(a):
    at_one = specialize(a, 1, 1)
    assert at_one == sum(antidiagonal_sums(a).values())
    assert at_one == quotient_uv_minus1(a).evaluate(1)


@given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 5))
def test_single_factor_expansion_is_geometric(e, order):
    if e == (0, 0):
        return
    s = expand_inverse_product([(e, 1)], arity=2, order=order)
    expected = {}
    k = 0
    while k * sum(e) <= order:
        expected[(k * e[0], k * e[1])] = 1
        k += 1
    assert s == MultiSeries(2, order, expected)


@given(small_polys)
@settings(max_examples=200)
def test_poly2_text_round_trip(a):
    assert parse_poly2(format_poly2(a)) == a


@given(st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=6))
def test_laurent_text_round_trip(terms):
    a = Laurent1(terms)
    assert parse_laurent1(format_laurent1(a)) == a


def test_golden_rendering():
    # canonical order: total degree ascending, then u-exponent descending
    assert format_poly2(GLUED_CONE) == "1+u+v+uv-u^2*v-u*v^2+2u^2*v^2"
    assert format_poly2(Poly2.zero()) == "0"
    assert format_poly2(-ONE) == "-1"
    assert parse_poly2("0").is_zero()


def test_parser_tolerates_stars_and_spaces():
    assert parse_poly2("1 + u*v") == ONE + UV
    assert parse_poly2("2*u^2*v^2") == Poly2.monomial(2, 2, 2)
    assert parse_poly2("u v") == UV  # juxtaposition with whitespace


def test_parser_rejects_garbage():
    import pytest

    from cyclemotive.errors import ParseError

    for bad in ("1++", "w", "u^", "u^-2", "3 3", ""):
        with pytest.raises(ParseError):
            parse_poly2(bad)


def test_laurent_negative_exponents_parse():
    a = parse_laurent1("u^-2+3-u")
    assert a == Laurent1({-2: 1, 0: 3, 1: -1})
    assert a.evaluate(1) == 3


def test_lpoly_round_trips():
    a = parse_lpoly("1+3L+L^4")
    assert a == LPoly((1, 3, 0, 0, 1))
    assert format_lpoly(a) == "1+3L+L^4"
    assert a.evaluate(2) == 1 + 6 + 16
    assert lpoly_from_diagonal(lpoly_to_poly2(a)) == a


def test_lpoly_from_diagonal_rejects_mixed():
    assert lpoly_from_diagonal(parse_poly2("1+uv")) == LPoly((1, 1))
    assert lpoly_from_diagonal(parse_poly2("1+u")) is None


def test_multiseries_truncation_discards_high_degree():
    s = MultiSeries(1, 2, {(0,): 1, (3,): 7})
    assert s == MultiSeries(1, 2, {(0,): 1})
    t = MultiSeries(1, 2, {(2,): 1})
    assert (t * t).terms == {}
