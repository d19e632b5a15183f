"""Exact determinants by fraction-free (Bareiss) elimination."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np


def det_exact(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix of rationals.

    Each row is scaled to integers by the lcm of its denominators, the
    integer matrix is reduced with Bareiss' division-free-remainder
    recurrence, and the scale is divided back out at the end.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")

    scale = 1
    mat: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        mat.append([int(x * lcm) for x in fr])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = mat[k][k]
        for i in range(k + 1, n):
            row_i = mat[i]
            row_k = mat[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * mat[n - 1][n - 1], scale)


def det_float(rows) -> complex:
    a = np.asarray(rows, dtype=complex)
    if a.size == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(a))


def rel_err(approx, ref) -> float:
    """|approx - ref| / max(1, |ref|); the float check used between routes."""
    ref_c = complex(ref)
    return abs(complex(approx) - ref_c) / max(1.0, abs(ref_c))
