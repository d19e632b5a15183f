"""Jacobian of the moment map and its determinant by independent routes.

Matrix convention: row index nu = 1..n (the coefficient a_nu being varied),
column index k = 0..n-1 (the moment M_k). The determinant does not depend
on this choice, so nothing here is ever transposed.

Routes for J(P) = det dmu(P):

* ``direct``   -- exact determinant of the exact Jacobian matrix;
* ``toeplitz`` -- det B(b) * det H, b the coefficients of P';
* ``ullemar``  -- Hurwitz determinant of the Moebius image of P';
* ``roots``    -- root products over the zeros of P' (floating point);
* ``resultant-squared`` -- J^2 through Res(P', P'*).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError, RouteMismatch
from .hurwitz import hurwitz_det, sylvester_resultant
from .linalg import det_exact, rel_err
from .moments import moment_map
from .polycore import (
    LaurentSeries,
    RatPoly,
    check_moment_polynomial,
    derivative,
    laurent_coeff,
    mobius_transform,
    reciprocal,
    substitute_inverse,
)
from .roots import RootSet, find_roots
from .structured import build_dual, build_h_table, dual_det_exact, h_det, h_det_closed_form

ROUTES = ("direct", "toeplitz", "roots", "ullemar", "resultant-squared")


@dataclass(frozen=True)
class JacobianMatrix:
    """entries[nu-1][k] = dM_k / da_nu."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)


def _check_indices(n: int, k: int, nu: int | None = None) -> None:
    if not 0 <= k <= n - 1:
        raise InputError(f"moment index k={k} outside 0..{n - 1}")
    if nu is not None and not 1 <= nu <= n:
        raise InputError(f"coefficient index nu={nu} outside 1..{n}")


def _partial_from_powers(dP: RatPoly, pk: RatPoly, pk1: RatPoly, k: int, nu: int) -> Fraction:
    first = substitute_inverse(pk) * LaurentSeries.from_poly(dP, shift=1 - nu)
    second = substitute_inverse(pk1).shift(nu)
    return laurent_coeff(first, 0) + Fraction(nu, k + 1) * laurent_coeff(second, 0)


def partial_moment(P: RatPoly, k: int, nu: int) -> Fraction:
    """dM_k/da_nu from the residue representation of M_k.

    lambda_0(P^k(1/z) P'(z) z^(1-nu)) + nu/(k+1) lambda_0(P^(k+1)(1/z) z^nu)
    """
    n = check_moment_polynomial(P, require_positive_a1=False)
    _check_indices(n, k, nu)
    pk = P**k
    return _partial_from_powers(derivative(P), pk, pk * P, k, nu)


def partial_row_lemma(P: RatPoly, k: int) -> tuple[Fraction, ...]:
    """Coefficients of z^0..z^(n-1) in P'(z) (P^k(z) + P^k(1/z))."""
    n = check_moment_polynomial(P, require_positive_a1=False)
    _check_indices(n, k)
    pk = P**k
    sym = LaurentSeries.from_poly(pk) + substitute_inverse(pk)
    prod = LaurentSeries.from_poly(derivative(P)) * sym
    return tuple(laurent_coeff(prod, m) for m in range(n))


def jacobian_matrix(P: RatPoly) -> JacobianMatrix:
    n = check_moment_polynomial(P)
    dP = derivative(P)
    powers = [RatPoly([1])]
    for _ in range(n):
        powers.append(powers[-1] * P)
    cols = []
    for k in range(n):
        sym = LaurentSeries.from_poly(powers[k]) + substitute_inverse(powers[k])
        prod = LaurentSeries.from_poly(dP) * sym
        cols.append(tuple(laurent_coeff(prod, m) for m in range(n)))
    entries = tuple(tuple(cols[k][nu - 1] for k in range(n)) for nu in range(1, n + 1))
    # second formula for every entry, from the residue form of M_k
    for nu in range(1, n + 1):
        for k in range(n):
            if _partial_from_powers(dP, powers[k], powers[k + 1], k, nu) != entries[nu - 1][k]:
                raise RouteMismatch(f"Jacobian entry ({nu}, {k}) differs between the two formulas")
    return JacobianMatrix(entries)


def jacobian_det_direct(P: RatPoly) -> Fraction:
    return det_exact(jacobian_matrix(P).entries)


def jacobian_det_toeplitz(P: RatPoly) -> Fraction:
    n = check_moment_polynomial(P)
    b = [derivative(P)[j] for j in range(n)]
    table = build_h_table(P)
    hd = h_det(table)
    if hd != h_det_closed_form(n, P[1]):
        raise RouteMismatch(f"det H = {hd} differs from 2 a_1^(n(n-1)/2)")
    return dual_det_exact(build_dual(b)) * hd


def jacobian_det_roots_forms(P: RatPoly, roots: RootSet | None = None) -> tuple[complex, complex]:
    """The two root-product forms of J(P) over the zeros w_i of P'.

    2 a_1^(n(n-1)/2) (n a_n)^n prod_{i<=j} (w_i w_j - 1) and
    2 a_1^(n(n-1)/2) (n a_n)^(n-2) P'(1) P'(-1) prod_{i<j} (w_i w_j - 1).
    """
    n = check_moment_polynomial(P)
    dP = derivative(P)
    w = list(find_roots(dP) if roots is None else roots)
    if len(w) != n - 1:
        raise InputError(f"P' has {n - 1} roots, got {len(w)}")
    lead = float(dP.leading)
    scale = 2.0 * float(P[1]) ** (n * (n - 1) // 2)
    full = strict = 1 + 0j
    for i in range(n - 1):
        for j in range(i + 1):
            f = w[i] * w[j] - 1
            full *= f
            if j < i:
                strict *= f
    return (
        complex(scale * lead**n * full),
        complex(scale * lead ** (n - 2) * float(dP(1)) * float(dP(-1)) * strict),
    )


def jacobian_det_roots(P: RatPoly, roots: RootSet | None = None, tol: float = 1e-10) -> complex:
    """J(P) from the zeros of P'; both root forms must agree within ``tol``."""
    first, second = jacobian_det_roots_forms(P, roots)
    if rel_err(first, second) > tol:
        raise RouteMismatch(f"root forms disagree: {first} vs {second}")
    if abs(first.imag) > tol * max(1.0, abs(first)):
        raise RouteMismatch(f"root form has imaginary part {first.imag}")
    return first


def mobius_hurwitz_factor(dP: RatPoly) -> Fraction:
    """Hurwitz determinant of the Moebius image of P'.

    For a constant P' (n = 1) the root-product form r_m^(m-1) with m = 0
    gives 1 / r_0, which keeps the Hurwitz route valid at n = 1.
    """
    if dP.degree == 0:
        return 1 / dP[0]
    return hurwitz_det(mobius_transform(dP))


def jacobian_det_ullemar(P: RatPoly) -> Fraction:
    """2^(-n(n-3)/2) a_1^(n(n-1)/2) P'(1) P'(-1) Delta(Moebius image of P')."""
    n = check_moment_polynomial(P)
    dP = derivative(P)
    p1, pm1 = dP(1), dP(-1)
    if p1 == 0:
        # Moebius image drops degree; J vanishes through the P'(1) factor anyway.
        return Fraction(0)
    power_of_two = Fraction(2) ** (-(n * (n - 3) // 2))
    return power_of_two * P[1] ** (n * (n - 1) // 2) * p1 * pm1 * mobius_hurwitz_factor(dP)


def jacobian_sq_resultant(P: RatPoly) -> Fraction:
    """4 (-1)^(n-1) a_1^(n(n-1)) Res(P', P'*) P'(-1) P'(1), which equals J^2."""
    n = check_moment_polynomial(P)
    dP = derivative(P)
    m = n - 1
    res = sylvester_resultant(dP, reciprocal(dP, m), m, m)
    sign = -1 if (n - 1) % 2 else 1
    return 4 * sign * P[1] ** (n * (n - 1)) * res * dP(-1) * dP(1)


def jacobian_fd_oracle(P: RatPoly, h: float = 1e-6) -> np.ndarray:
    """Central differences of the moment map, one coefficient at a time.

    The perturbed moment vectors are computed exactly at a_nu +- h (h read
    as an exact binary rational), so only the O(h^2) truncation error
    remains.
    """
    if h <= 0:
        raise InputError("step h must be positive")
    n = check_moment_polynomial(P)
    step = Fraction(h)
    out = np.zeros((n, n))
    for nu in range(1, n + 1):
        up = list(P.coeffs)
        down = list(P.coeffs)
        up[nu] += step
        down[nu] -= step
        m_up = moment_map(RatPoly(up)).values
        m_down = moment_map(RatPoly(down)).values
        for k in range(n):
            upper = m_up[k] if k < len(m_up) else 0
            lower = m_down[k] if k < len(m_down) else 0
            out[nu - 1, k] = float((upper - lower) / (2 * step))
    return out


@dataclass
class RouteReport:
    """Values of J(P) per route and the agreement verdict."""

    values: dict[str, object] = field(default_factory=dict)
    agree: dict[str, bool] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors and all(self.agree.values())


def cross_check(P: RatPoly, routes=ROUTES, tol: float = 1e-8) -> RouteReport:
    """Evaluate the requested routes and compare each against ``direct``.

    Exact routes must match exactly, ``roots`` within ``tol`` relative to
    max(1, |J|), and ``resultant-squared`` must equal J^2 exactly.
    """
    unknown = set(routes) - set(ROUTES)
    if unknown:
        raise InputError(f"unknown routes: {sorted(unknown)}")
    report = RouteReport()
    direct = jacobian_det_direct(P)
    report.values["direct"] = direct
    for name in routes:
        if name == "direct":
            report.agree[name] = True
            continue
        try:
            if name == "toeplitz":
                val = jacobian_det_toeplitz(P)
                ok = val == direct
            elif name == "ullemar":
                val = jacobian_det_ullemar(P)
                ok = val == direct
            elif name == "resultant-squared":
                val = jacobian_sq_resultant(P)
                ok = val == direct**2
            else:
                val = jacobian_det_roots(P)
                ok = rel_err(val, direct) <= tol
        except RouteMismatch as exc:
            report.errors[name] = str(exc)
            report.agree[name] = False
            continue
        report.values[name] = val
        report.agree[name] = ok
    return report
