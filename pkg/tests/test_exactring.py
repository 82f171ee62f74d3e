from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelmod2.exactring import (
    XVAR,
    ExponentVector,
    LaurentPoly,
    TruncatedSeries,
    UniPoly,
    poly_eval,
    poly_mul,
    series_inverse,
)

x0 = LaurentPoly.variable(0)
x1 = LaurentPoly.variable(1)
x3 = LaurentPoly.variable(2)
x7 = LaurentPoly.variable(3)


def test_poly_mul_examples():
    assert poly_mul(x1, x1) == LaurentPoly.monomial(1, {1: 2})
    ratio = LaurentPoly.monomial(1, {2: 1, 1: -1})  # x3/x1
    assert poly_mul(ratio, x1 ** 2) == x1 * x3
    assert poly_mul(1 + x0, 1 - x0) == 1 - x0 ** 2


def test_monomial_product_stays_monomial():
    a = LaurentPoly.monomial(-3, {0: 2, 2: -1})
    b = LaurentPoly.monomial(2, {2: 1, 4: 5})
    assert (a * b).is_monomial()
    assert a * b == LaurentPoly.monomial(-6, {0: 2, 4: 5})


def test_poly_eval_examples():
    p = LaurentPoly.monomial(1, {0: 1, 2: 2, 3: 2})  # x0*x3^2*x7^2
    assert poly_eval(p, {0: 1, 2: 1, 3: 1}) == 1
    assert poly_eval(x1, {1: -3}) == -3
    ratio = LaurentPoly.monomial(1, {2: 1, 1: -1})
    assert poly_eval(ratio, {2: 4, 1: 2}) == 2


def test_poly_eval_errors():
    ratio = LaurentPoly.monomial(1, {2: 1, 1: -1})
    with pytest.raises(ZeroDivisionError):
        poly_eval(ratio, {2: 4, 1: 0})
    with pytest.raises(KeyError):
        poly_eval(ratio, {2: 4})


def test_exponent_vector_canonical():
    ev = ExponentVector([(3, 0), (1, 2), (0, 1)])
    assert ev.items() == ((0, 1), (1, 2))  # zero exponents dropped, sorted
    assert ev.get(3) == 0


def test_rendering_examples():
    d11 = LaurentPoly.monomial(-1, {0: 1, 2: 2, 3: 2, 4: 6})
    assert str(d11) == "-x0*x3^2*x7^2*x15^6"
    assert str(LaurentPoly.monomial(1, {2: 1, 1: -1})) == "x3/x1"
    assert str(LaurentPoly.monomial(-1, {1: 1, 3: 1, 2: -2})) == "-x1*x7/x3^2"
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.constant(-2)) == "-2"
    assert str(LaurentPoly.monomial(1, {1: -2})) == "1/x1^2"
    assert str(LaurentPoly.variable(XVAR, 10)) == "x^10"
    assert str(1 - x0 ** 2) == "1 - x0^2"


def test_parse_round_trip_samples():
    for text in (
        "0", "1", "-1", "x0", "-x0*x3^2*x7^2*x15^6", "x3/x1", "-x1*x7/x3^2",
        "2*x1", "-3/x7^2", "x^10", "-x^4", "1 - x0^2", "x1^2 + x3",
    ):
        assert str(LaurentPoly.parse(text)) == text


def test_parse_rejects_bad_subscript():
    with pytest.raises(ValueError):
        LaurentPoly.parse("x5")


def test_division_is_exact_monomial_division():
    num = LaurentPoly.monomial(-1, {1: 1, 2: 1})  # -x1*x3
    den = LaurentPoly.monomial(1, {1: 2})
    assert num / den == LaurentPoly.monomial(-1, {2: 1, 1: -1})
    with pytest.raises(ValueError):
        (x0 + x1) / (x0 + x1)  # divisor must be a monomial


def test_pow_negative_inverts_monomial():
    m = LaurentPoly.monomial(-1, {2: 3})
    assert m ** -2 == LaurentPoly.monomial(1, {2: -6})


small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=5))
    p = LaurentPoly.zero()
    for _ in range(n_terms):
        coeff = draw(small_ints)
        exps = draw(
            st.dictionaries(
                st.integers(min_value=0, max_value=4),
                st.integers(min_value=-3, max_value=3),
                max_size=3,
            )
        )
        p = p + LaurentPoly.monomial(coeff, exps)
    return p


@given(polys(), polys(), polys())
@settings(max_examples=150, deadline=None)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys(), polys(), st.data())
@settings(max_examples=150, deadline=None)
def test_eval_is_ring_homomorphism(p, q, data):
    variables = p.variables() | q.variables()
    assignment = {
        k: data.draw(
            st.fractions(
                min_value=Fraction(-5), max_value=Fraction(5), max_denominator=7
            ).filter(lambda f: f != 0),
            label=f"x[{k}]",
        )
        for k in variables
    }
    assert poly_eval(p * q, assignment) == poly_eval(p, assignment) * poly_eval(q, assignment)
    assert poly_eval(p + q, assignment) == poly_eval(p, assignment) + poly_eval(q, assignment)


@given(polys())
@settings(max_examples=150, deadline=None)
def test_parse_round_trip_random(p):
    assert LaurentPoly.parse(str(p)) == p


def test_unipoly_basics():
    p = UniPoly([-1, 0, 1])
    assert str(p) == "x^2 - 1"
    assert p.degree == 2
    assert p * UniPoly([1, 1]) == UniPoly([-1, -1, 1, 1])
    assert p - p == UniPoly([])
    assert p.shift_up() == UniPoly([0, -1, 0, 1])
    assert UniPoly([0, 0, 0]) == UniPoly([])  # trailing zeros trimmed


def test_series_inverse_examples():
    s = TruncatedSeries([1, -1], 4)  # 1 - z
    assert series_inverse(s) == TruncatedSeries([1, 1, 1, 1], 4)
    assert series_inverse(TruncatedSeries([1], 3)) == TruncatedSeries([1], 3)
    assert series_inverse(TruncatedSeries([1, 1], 3)) == TruncatedSeries([1, -1, 1], 3)


def test_series_inverse_requires_unit():
    with pytest.raises(ZeroDivisionError):
        series_inverse(TruncatedSeries([0, 1], 3))


def test_series_order_is_min_of_operands():
    a = TruncatedSeries([1, 2, 3], 3)
    b = TruncatedSeries([1, 1], 2)
    assert (a * b).order == 2
    assert (a + b).order == 2


@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=10))
@settings(max_examples=100, deadline=None)
def test_series_inverse_property(coeffs):
    order = len(coeffs)
    s = TruncatedSeries(coeffs, order)
    assert s * series_inverse(s) == TruncatedSeries.one(order)
