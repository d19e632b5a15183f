"""Toeplitz matrices, their dual matrices, and the symmetrized-power table.

For a generator ``x`` the symmetric Toeplitz matrix is T(x)[i][k] = x[|i-k|].
The dual matrix B(y) is defined by T(x) y = B(y) x for every x; collecting
the coefficient of x[j] in (T(x) y)[i] gives

    B(y)[i][j] = y[i+j] (if i+j < L) + y[i-j] (if j >= 1 and i >= j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError
from .linalg import det_exact
from .polycore import LaurentSeries, RatPoly, check_moment_polynomial, substitute_inverse
from .roots import find_roots

Matrix = tuple[tuple[Fraction, ...], ...]


def _vector(x: Iterable) -> tuple[Fraction, ...]:
    v = tuple(Fraction(c) for c in x)
    if not v:
        raise InputError("generator vector must be nonempty")
    return v


def matvec(mat: Sequence[Sequence], vec: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in mat]


@dataclass(frozen=True)
class ToeplitzMatrix:
    generator: tuple[Fraction, ...]
    entries: Matrix


@dataclass(frozen=True)
class DualMatrix:
    generator: tuple[Fraction, ...]
    entries: Matrix


@dataclass(frozen=True)
class SymmetrizedPowerTable:
    """h[m][k] = coefficient of z^m in P^k(z) + P^k(1/z), 0 <= m, k < n."""

    h: Matrix
    a1: Fraction

    @property
    def n(self) -> int:
        return len(self.h)


def build_toeplitz(x: Iterable) -> ToeplitzMatrix:
    g = _vector(x)
    L = len(g)
    rows = tuple(tuple(g[abs(i - k)] for k in range(L)) for i in range(L))
    return ToeplitzMatrix(g, rows)


def build_dual(y: Iterable) -> DualMatrix:
    g = _vector(y)
    L = len(g)
    zero = Fraction(0)
    rows = []
    for i in range(L):
        row = []
        for j in range(L):
            val = g[i + j] if i + j < L else zero
            if j >= 1 and i >= j:
                val += g[i - j]
            row.append(val)
        rows.append(tuple(row))
    return DualMatrix(g, tuple(rows))


def dual_det_exact(B: DualMatrix) -> Fraction:
    return det_exact(B.entries)


def dual_det_roots(y: Sequence, roots=None) -> complex:
    """det B(y) from the roots of B_y(z) = y_0 + ... + y_m z^m.

    Evaluates y_m^(m+1) times the product of (w_i w_j - 1) over i >= j.
    """
    g = _vector(y)
    ym = g[-1]
    if ym == 0:
        raise InputError("leading generator entry y_m must be nonzero")
    m = len(g) - 1
    if roots is None:
        roots = find_roots(RatPoly(g))
    w = list(roots)
    if len(w) != m:
        raise InputError(f"expected {m} roots, got {len(w)}")
    prod = 1 + 0j
    for i in range(m):
        for j in range(i + 1):
            prod *= w[i] * w[j] - 1
    return complex(float(ym) ** (m + 1) * prod)


def build_h_table(P: RatPoly) -> SymmetrizedPowerTable:
    n = check_moment_polynomial(P, require_positive_a1=False)
    power = RatPoly([1])
    cols = []
    for k in range(n):
        sym = LaurentSeries.from_poly(power) + substitute_inverse(power)
        cols.append([sym.coeff(m) for m in range(n)])
        power = power * P
    h = tuple(tuple(cols[k][m] for k in range(n)) for m in range(n))
    return SymmetrizedPowerTable(h, P[1])


def h_det(T: SymmetrizedPowerTable) -> Fraction:
    return det_exact(T.h)


def h_det_closed_form(n: int, a1) -> Fraction:
    """2 a_1^(n(n-1)/2), the product of the diagonal of the h table."""
    return 2 * Fraction(a1) ** (n * (n - 1) // 2)


def symmetric_vandermonde_det(points: Sequence[complex]) -> complex:
    """Determinant of W[i][j] = a_j^i + a_j^(-i) for i, j = 0..m."""
    pts = np.asarray(points, dtype=complex)
    if np.any(pts == 0):
        raise InputError("points must be nonzero")
    i = np.arange(len(pts))[:, None]
    W = pts[None, :] ** i + pts[None, :] ** (-i)
    return complex(np.linalg.det(W))


def symmetric_vandermonde_closed_form(points: Sequence[complex]) -> complex:
    pts = [complex(p) for p in points]
    m = len(pts) - 1
    out = 2 / math.prod(pts) ** m
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            out *= (pts[j] - pts[i]) * (pts[i] * pts[j] - 1)
    return complex(out)
