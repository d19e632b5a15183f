import cmath

import numpy as np
import pytest
from hypothesis import given

from conftest import rat_polys
from momentjac.errors import InputError
from momentjac.polycore import RatPoly
from momentjac.roots import find_roots


def P(text):
    return RatPoly.parse(text)


@pytest.mark.parametrize(
    "src, expected",
    [("1,1/2", [-2]), ("1,0,1", [1j, -1j]), ("1,2", [-0.5]), ("2,3,1", [-1, -2])],
)
def test_known_roots(src, expected):
    got = sorted(find_roots(P(src)), key=lambda z: (z.real, z.imag))
    want = sorted(map(complex, expected), key=lambda z: (z.real, z.imag))
    assert np.allclose(got, want, atol=1e-12)


def test_zero_roots_and_constants():
    assert len(find_roots(P("0,0,1"))) == 2
    assert len(find_roots(P("3"))) == 0
    with pytest.raises(InputError):
        find_roots(RatPoly([]))


def test_multiple_root():
    rs = find_roots(P("1,3,3,1"))
    assert len(rs) == 3
    assert all(abs(z + 1) < 1e-4 for z in rs)


@given(rat_polys(min_deg=1, max_deg=10))
def test_count_residual_and_pairing(p):
    rs = find_roots(p)
    assert len(rs) == p.degree
    assert rs.residual_bound <= 1e-11 * (1 + max(abs(float(c)) for c in p.coeffs))
    vals = list(rs)
    for z in vals:
        if z.imag != 0:
            assert min(abs(w - z.conjugate()) for w in vals) <= 1e-6 * max(1.0, abs(z))


def test_roots_of_unity():
    rs = find_roots(RatPoly([-1] + [0] * 9 + [1]))
    for z in rs:
        assert abs(abs(z) - 1) < 1e-12
        assert abs(cmath.exp(10j * cmath.phase(z)) - 1) < 1e-10
