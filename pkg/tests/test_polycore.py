from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import rat_polys, rationals
from momentjac.errors import InputError
from momentjac.polycore import (
    ZERO_DEGREE,
    LaurentSeries,
    RatPoly,
    check_moment_polynomial,
    derivative,
    laurent_coeff,
    mobius_transform,
    reciprocal,
    substitute_inverse,
)


def P(text):
    return RatPoly.parse(text)


def test_trailing_zeros_stripped():
    p = RatPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly([]).degree == ZERO_DEGREE


def test_parse_and_str():
    p = P("0, 1, 1/4")
    assert p.coeffs == (0, 1, F(1, 4))
    assert p[5] == 0
    with pytest.raises(InputError):
        P("1,,2")
    with pytest.raises(ValueError):
        P("1,x")


def test_rejects_floats():
    with pytest.raises(TypeError):
        RatPoly([0.5])


@pytest.mark.parametrize(
    "src, expected",
    [("0,1,1/4", "1,1/2"), ("5", "0"), ("0,1,0,1/3", "1,0,1")],
)
def test_derivative(src, expected):
    assert derivative(P(src)) == P(expected)


@pytest.mark.parametrize(
    "src, p, expected",
    [("1,1/2", 1, "1/2,1"), ("0,0,0,1", 3, "1"), ("1,2,3", 2, "3,2,1"), ("1", 2, "0,0,1")],
)
def test_reciprocal(src, p, expected):
    assert reciprocal(P(src), p) == P(expected)


def test_reciprocal_below_degree():
    with pytest.raises(InputError):
        reciprocal(P("1,2,3"), 1)


@given(rat_polys(max_deg=6), st.integers(0, 3))
def test_reciprocal_involution(a, extra):
    p = int(a.degree) + extra
    if a[0] != 0:
        assert reciprocal(reciprocal(a, p), p) == a


@pytest.mark.parametrize("src, expected", [("1,1/2", "1/2,3/2"), ("0,1", "-1,1")])
def test_mobius_examples(src, expected):
    assert mobius_transform(P(src)) == P(expected)


@given(rat_polys(min_deg=1, max_deg=5))
def test_mobius_leading_is_value_at_one(r):
    t = mobius_transform(r)
    m = int(r.degree)
    if r(1) == 0:
        assert t.is_zero() or t.degree < m
    else:
        assert t.degree == m and t.leading == r(1)


@given(rat_polys(min_deg=1, max_deg=5), rationals(5))
def test_mobius_pointwise(r, z):
    # (z+1)^m r((z-1)/(z+1)) evaluated directly
    if z == -1:
        return
    m = int(r.degree)
    assert mobius_transform(r)(z) == (z + 1) ** m * r((z - 1) / (z + 1))


def test_laurent_lookup():
    f = LaurentSeries({-1: 2, 0: 3, 1: 5})
    assert laurent_coeff(f, 0) == 3
    assert laurent_coeff(f, -1) == 2
    assert laurent_coeff(f, 7) == 0


def test_laurent_symmetric_sum():
    p = P("0,1,1")
    sym = LaurentSeries.from_poly(p) + substitute_inverse(p)
    assert sym.coeff(-2) == 1 and sym.coeff(2) == 1


@pytest.mark.parametrize(
    "src, terms",
    [("0,1,1/4", {-1: 1, -2: F(1, 4)}), ("1", {0: 1})],
)
def test_substitute_inverse(src, terms):
    assert substitute_inverse(P(src)) == LaurentSeries(terms)


def test_substitute_inverse_of_square():
    assert substitute_inverse(P("0,1,1") ** 2) == LaurentSeries({-2: 1, -3: 2, -4: 1})


@given(rat_polys(max_deg=4), rat_polys(max_deg=4), st.integers(-3, 3), st.integers(-3, 3))
def test_laurent_product_is_convolution(a, b, s, t):
    fa = LaurentSeries.from_poly(a, shift=s)
    fb = LaurentSeries.from_poly(b, shift=t)
    prod = fa * fb
    for m in range(-10, 12):
        expected = sum((fa.coeff(i) * fb.coeff(m - i) for i in range(-10, 12)), F(0))
        assert prod.coeff(m) == expected


@given(rat_polys(max_deg=4), rat_polys(max_deg=4))
def test_ring_laws(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b)(F(3, 7)) == a(F(3, 7)) * b(F(3, 7))
    assert a**3 == a * a * a


@given(rat_polys(min_deg=1, max_deg=6), rationals(3))
def test_divide_linear(a, r):
    q, rem = a.divide_linear(r)
    assert rem == a(r)
    assert q * RatPoly([-r, 1]) + RatPoly([rem]) == a


@given(rat_polys(max_deg=5), rat_polys(max_deg=5), st.integers(0, 6))
def test_mul_truncated(a, b, top):
    assert a.mul_truncated(b, top) == (a * b).truncate(top)


@pytest.mark.parametrize("src", ["0", "1,1", "0,-1,2", "0,0,1"])
def test_moment_polynomial_preconditions(src):
    with pytest.raises(InputError):
        check_moment_polynomial(P(src))


def test_moment_polynomial_ok():
    assert check_moment_polynomial(P("0,1,1/4")) == 2
    assert check_moment_polynomial(P("0,-1,1"), require_positive_a1=False) == 2
