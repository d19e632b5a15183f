"""Complex moments of real polynomials P(z) = a_1 z + ... + a_n z^n.

Two exact routes are provided. :func:`moments_richardson` enumerates the
index tuples of Richardson's sum directly; :func:`moments_residue` takes a
residue at the origin of a Laurent product. :func:`moment_map` returns the
moment vector only after both routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InputError, RouteMismatch
from .polycore import (
    LaurentSeries,
    RatPoly,
    check_moment_polynomial,
    derivative,
    laurent_coeff,
    substitute_inverse,
)


@dataclass(frozen=True)
class MomentVector:
    values: tuple[Fraction, ...]
    n: int

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def moments_richardson(P: RatPoly, count: int | None = None) -> MomentVector:
    """Moments by Richardson's sum over index tuples.

    M_k = sum of i_1 a_{i_1} ... a_{i_{k+1}} a_{i_1 + ... + i_{k+1}} over all
    tuples with every i_j >= 1; coefficients beyond the degree are zero.
    ``count`` defaults to n and may exceed it (the extra moments vanish).
    """
    n = check_moment_polynomial(P, require_positive_a1=False)
    count = n if count is None else count
    a = P.coeffs
    values = []
    for k in range(count):
        parts = k + 1
        total = Fraction(0)
        for s in range(parts, n + 1):
            if a[s] == 0:
                continue
            for idx in _compositions(s, parts):
                term = idx[0] * a[s]
                for i in idx:
                    term *= a[i]
                    if not term:
                        break
                total += term
        values.append(total)
    return MomentVector(tuple(values), n)


def moments_residue(P: RatPoly, count: int | None = None) -> MomentVector:
    """Moments from M_k = res_0[P^{k+1}(w) P'(1/w) w^{-2}] / (k + 1).

    Only coefficients of P^{k+1} up to degree n can reach the residue, so the
    powers are carried truncated.
    """
    n = check_moment_polynomial(P, require_positive_a1=False)
    count = n if count is None else count
    dp_inv = substitute_inverse(derivative(P)).shift(-2)
    power = RatPoly([1])
    values = []
    for k in range(count):
        power = power.mul_truncated(P, n)
        integrand = LaurentSeries.from_poly(power) * dp_inv
        values.append(laurent_coeff(integrand, -1) / (k + 1))
    return MomentVector(tuple(values), n)


def moment_map(P: RatPoly) -> MomentVector:
    """The moment vector (M_0, ..., M_{n-1}) of P, cross-checked by two routes."""
    check_moment_polynomial(P)
    rich = moments_richardson(P)
    res = moments_residue(P)
    if rich.values != res.values:
        raise RouteMismatch(f"moment routes disagree for {P}: {rich.values} vs {res.values}")
    return rich


def cauchy_series(P: RatPoly, terms: int) -> LaurentSeries:
    """Germ at infinity of the Cauchy transform: sum of M_k z^{-(k+1)}."""
    if terms < 1:
        raise InputError("terms must be at least 1")
    mu = moment_map(P)
    return LaurentSeries({-(k + 1): mu[k] for k in range(min(terms, mu.n))})
