from fractions import Fraction as F

import numpy as np
from hypothesis import given, strategies as st

from conftest import rationals
from momentjac.linalg import det_exact, det_float, rel_err


def test_small_cases():
    assert det_exact([]) == 1
    assert det_exact([[F(5)]]) == 5
    assert det_exact([[2, F(1, 2)], [1, 1]]) == F(3, 2)
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0


def _leibniz(m):
    import itertools

    n = len(m)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(-1) ** inv
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals(5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(m):
    assert det_exact(m) == _leibniz(m)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(rationals(5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_float_det_close(m):
    exact = det_exact(m)
    assert rel_err(det_float(m), float(exact)) < 1e-8 * max(1.0, float(np.abs(np.array(m, dtype=float)).max()) ** len(m))


def test_rel_err():
    assert rel_err(1.0, 1.0) == 0
    assert rel_err(0.5, 0) == 0.5
    assert rel_err(110, 100) == 0.1
