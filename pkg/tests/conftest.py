from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from momentjac.polycore import RatPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(bound=10, max_den=16, nonzero=False, positive=False):
    lo = Fraction(1, max_den) if positive else -bound
    s = st.fractions(min_value=lo, max_value=bound, max_denominator=max_den)
    if nonzero:
        s = s.filter(lambda x: x != 0)
    return s


@st.composite
def rat_polys(draw, min_deg=0, max_deg=6, bound=10):
    deg = draw(st.integers(min_deg, max_deg))
    cs = draw(st.lists(rationals(bound), min_size=deg, max_size=deg))
    lead = draw(rationals(bound, nonzero=True))
    return RatPoly(cs + [lead])


@st.composite
def moment_polys(draw, min_deg=1, max_deg=6, bound=4):
    """P(0) = 0, a_1 > 0, a_n != 0."""
    deg = draw(st.integers(min_deg, max_deg))
    a1 = draw(rationals(bound, positive=True))
    mid = draw(st.lists(rationals(bound), min_size=max(deg - 2, 0), max_size=max(deg - 2, 0)))
    if deg == 1:
        return RatPoly([0, a1])
    lead = draw(rationals(bound, nonzero=True))
    return RatPoly([0, a1] + mid + [lead])


@pytest.fixture
def quarter():
    """z + z^2/4, the worked two-coefficient example."""
    return RatPoly.parse("0,1,1/4")


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
