from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from momentjac.errors import InputError
from momentjac.jacobian import jacobian_det_direct
from momentjac.polycore import RatPoly, derivative
from momentjac.roots import find_roots
from momentjac.univalence import (
    BOUNDARY,
    CURVED,
    EXTERIOR,
    INTERIOR,
    PI_MINUS,
    PI_PLUS,
    classify,
    is_locally_univalent,
    random_polynomial,
    reciprocal_resultant,
    sample_interior,
)


def P(text):
    return RatPoly.parse(text)


def integrate(dp: RatPoly) -> RatPoly:
    return RatPoly([0] + [c / (j + 1) for j, c in enumerate(dp.coeffs)])


def test_univalence_examples():
    r = is_locally_univalent(P("0,1,1/4"))
    assert r.locally_univalent and abs(r.margin - 1) < 1e-12 and not r.escalated
    assert not is_locally_univalent(P("0,1,1")).locally_univalent
    r = is_locally_univalent(P("0,1,1/2"))
    assert not r.locally_univalent and r.escalated
    assert is_locally_univalent(P("0,4")).locally_univalent
    with pytest.raises(InputError):
        is_locally_univalent(P("0,0,1"))


def test_classification_anchors():
    c = classify(P("0,1,1/4"))
    assert c.verdict == INTERIOR and c.witness["Res(P',P'*)"] == F(-3, 4)
    c = classify(P("0,1,1/2"))
    assert c.verdict == BOUNDARY and c.surfaces == {PI_MINUS}
    assert c.witness["P'(-1)"] == 0 and c.witness["Res(P',P'*)"] == 0
    c = classify(P("0,1,0,1/3"))
    assert c.verdict == BOUNDARY and c.surfaces == {CURVED}
    assert c.witness["P'(1)"] == 2 and c.witness["P'(-1)"] == 2
    assert c.label() == "Boundary{A}"


def test_other_verdicts():
    assert classify(P("0,1,1")).verdict == EXTERIOR
    assert classify(P("0,1,-1/2")).surfaces == {PI_PLUS}
    assert classify(P("0,1,0,0,1/4")).surfaces == {PI_MINUS, CURVED}
    assert classify(P("0,3")).verdict == INTERIOR
    # double root at -1: on the circle, J vanishes
    c = classify(P("0,1,1,1/3"))
    assert c.verdict == BOUNDARY and PI_MINUS in c.surfaces


@given(
    st.lists(st.tuples(rationals(4), rationals(4)).filter(lambda t: t[0] ** 2 + t[1] ** 2 > 1), max_size=2),
    rationals(3, positive=True),
)
def test_constructed_boundary_polynomials(quads, c):
    # P' = c (z^2 + 1) Q(z) with Q's roots off the closed disk
    dp = RatPoly([c, 0, c])
    for re, im in quads:
        dp = dp * RatPoly([re * re + im * im, -2 * re, 1])
    p = integrate(dp)
    assert jacobian_det_direct(p) == 0
    cl = classify(p)
    assert cl.verdict == BOUNDARY and CURVED in cl.surfaces
    assert cl.witness["Res(P',P'*)"] == 0


def test_boundary_always_has_zero_resultant():
    rng = np.random.default_rng(5)
    for n in range(2, 6):
        for _ in range(40):
            p = random_polynomial(n, rng)
            c = classify(p)
            if c.verdict == BOUNDARY:
                assert c.witness["Res(P',P'*)"] == 0
            if c.witness["Res(P',P'*)"] != 0:
                assert c.verdict != BOUNDARY


def test_dilatation_stays_interior():
    t = 1 - F(1, 1000)
    for n in range(2, 7):
        for p in sample_interior(n, seed=n, trials=5000, count=10):
            pt = RatPoly([c * t ** (j - 1) for j, c in enumerate(p.coeffs)])
            assert classify(pt).verdict == INTERIOR


def test_sampler_examples():
    for seed in (0, 1, 2):
        for p in sample_interior(2, seed, trials=500):
            assert abs(p[2]) < p[1] / 2
    ones = sample_interior(1, 0, trials=50)
    assert len(ones) == 50 and all(0 < p[1] <= 10 for p in ones)
    threes = sample_interior(3, 42, trials=10_000, count=50)
    assert threes and all(jacobian_det_direct(p) != 0 for p in threes)


def test_sampler_is_deterministic():
    assert sample_interior(5, 9, trials=3000, count=20) == sample_interior(5, 9, trials=3000, count=20)


def test_sampler_ranges():
    rng = np.random.default_rng(0)
    for _ in range(300):
        p = random_polynomial(int(rng.integers(1, 9)), rng)
        assert p[0] == 0 and 0 < p[1] <= 10
        assert all(abs(c) <= 10 and c.denominator <= 64 for c in p.coeffs)
        assert p.leading != 0


def test_sampler_input_errors():
    with pytest.raises(InputError):
        sample_interior(0, 0, 10)


def test_conjugate_symmetry_of_roots():
    rng = np.random.default_rng(8)
    for _ in range(100):
        dp = derivative(random_polynomial(int(rng.integers(2, 10)), rng))
        roots = list(find_roots(dp))
        for z in roots:
            assert min(abs(w - z.conjugate()) for w in roots) <= 1e-6 * max(1, abs(z))


def test_reciprocal_resultant_anchor():
    assert reciprocal_resultant(P("1,1/2")) == F(-3, 4)
    assert reciprocal_resultant(P("1,0,1")) == 0
