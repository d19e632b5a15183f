"""Hurwitz determinants, Sylvester resultants and the W/V root-product forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, RouteMismatch
from .linalg import det_exact, rel_err
from .polycore import RatPoly, mobius_transform, reciprocal
from .roots import find_roots


@dataclass(frozen=True)
class HurwitzMatrix:
    """G[i][j] = r_{m+i-2j} (1-based), with r_k = 0 outside 0..m."""

    source: RatPoly
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)


def _roots_for(p: RatPoly, roots) -> list[complex]:
    w = list(find_roots(p) if roots is None else roots)
    if len(w) != p.degree:
        raise InputError(f"expected {p.degree} roots, got {len(w)}")
    return w


def hurwitz_matrix(R: RatPoly) -> HurwitzMatrix:
    if R.is_zero() or R.degree < 1:
        raise InputError("Hurwitz matrix needs a polynomial of degree >= 1")
    m = int(R.degree)
    rows = tuple(
        tuple(R[m + i - 2 * j] if 0 <= m + i - 2 * j <= m else Fraction(0) for j in range(1, m + 1))
        for i in range(1, m + 1)
    )
    return HurwitzMatrix(R, rows)


def hurwitz_det(R: RatPoly) -> Fraction:
    """Leading principal minor of order m - 1 of the Hurwitz matrix (1 when m = 1)."""
    G = hurwitz_matrix(R).entries
    k = len(G) - 1
    return det_exact([row[:k] for row in G[:k]])


def hurwitz_det_roots(R: RatPoly, roots=None) -> complex:
    """(-1)^((m^2-m)/2) r_m^(m-1) times the product of (z_i + z_j), i < j."""
    if R.is_zero() or R.degree < 1:
        raise InputError("Hurwitz determinant needs degree >= 1")
    m = int(R.degree)
    z = _roots_for(R, roots)
    prod = 1 + 0j
    for i in range(m):
        for j in range(i + 1, m):
            prod *= z[i] + z[j]
    sign = -1 if ((m * m - m) // 2) % 2 else 1
    return sign * float(R.leading) ** (m - 1) * prod


def mobius_hurwitz_det(R: RatPoly, roots=None, tol: float = 1e-8) -> complex:
    """Hurwitz determinant of the Moebius image of R, by two routes.

    The exact minor of the transformed polynomial is compared with
    2^((m^2-m)/2) r_m^(m-1) prod_{i<j} (z_i z_j - 1); the product value is
    returned once they agree.
    """
    if R.is_zero() or R.degree < 1:
        raise InputError("Moebius-Hurwitz determinant needs degree >= 1")
    if R(1) == 0:
        raise InputError("R(1) = 0: the Moebius image drops degree")
    m = int(R.degree)
    z = _roots_for(R, roots)
    prod = 1 + 0j
    for i in range(m):
        for j in range(i + 1, m):
            prod *= z[i] * z[j] - 1
    via_roots = 2.0 ** ((m * m - m) // 2) * float(R.leading) ** (m - 1) * prod
    exact = hurwitz_det(mobius_transform(R))
    if rel_err(via_roots, exact) > tol:
        raise RouteMismatch(f"Moebius-Hurwitz routes disagree: {via_roots} vs {exact}")
    return complex(via_roots)


def sylvester_matrix(A: RatPoly, B: RatPoly, deg_a: int | None = None, deg_b: int | None = None):
    """Standard Sylvester matrix with coefficients in descending order.

    Optional formal degrees pad the polynomials with leading zeros.
    """
    na = int(A.degree) if deg_a is None else deg_a
    nb = int(B.degree) if deg_b is None else deg_b
    if na < A.degree or nb < B.degree:
        raise InputError("formal degree below actual degree")
    size = na + nb
    a_desc = [A[k] for k in range(na, -1, -1)]
    b_desc = [B[k] for k in range(nb, -1, -1)]
    rows = []
    for i in range(nb):
        rows.append([Fraction(0)] * i + a_desc + [Fraction(0)] * (size - i - na - 1))
    for i in range(na):
        rows.append([Fraction(0)] * i + b_desc + [Fraction(0)] * (size - i - nb - 1))
    return rows


def sylvester_resultant(A: RatPoly, B: RatPoly, deg_a: int | None = None, deg_b: int | None = None) -> Fraction:
    """Res(A, B) = A_lead^deg(B) B_lead^deg(A) prod (alpha_i - beta_j), exactly."""
    if A.is_zero() or B.is_zero():
        raise InputError("resultant of the zero polynomial")
    return det_exact(sylvester_matrix(A, B, deg_a, deg_b))


def self_reciprocal_resultant(A: RatPoly) -> Fraction:
    """Res(A, A*) with A* = z^n A(1/z), taken with formal degree n on both sides."""
    if A.is_zero() or A.degree < 1:
        raise InputError("self-reciprocal resultant needs degree >= 1")
    n = int(A.degree)
    return sylvester_resultant(A, reciprocal(A, n), n, n)


def self_reciprocal_resultant_roots(A: RatPoly, roots=None) -> complex:
    """(-1)^n A(-1) A(1) A_n^(2n-2) prod_{i>j} (a_i a_j - 1)^2 in floating point."""
    n = int(A.degree)
    z = _roots_for(A, roots)
    prod = 1 + 0j
    for i in range(n):
        for j in range(i):
            prod *= (z[i] * z[j] - 1) ** 2
    return (-1) ** n * float(A(-1)) * float(A(1)) * float(A.leading) ** (2 * n - 2) * prod


def w_form(A: RatPoly, roots=None) -> complex:
    """W_n(A) = A_n^(n+1) prod_{i<=j} (a_i a_j - 1)."""
    if A.is_zero() or A.leading == 0:
        raise InputError("W form needs a nonzero leading coefficient")
    n = int(A.degree)
    z = _roots_for(A, roots)
    prod = 1 + 0j
    for i in range(n):
        for j in range(i + 1):
            prod *= z[i] * z[j] - 1
    return float(A.leading) ** (n + 1) * prod


def v_form_eval(A: RatPoly, roots=None, n: int | None = None) -> complex:
    """V_n(A) = A_n^(n-1) prod_{i<j} (a_i a_j - 1).

    With a formal degree ``n`` above deg A the coefficient vector is read as
    padded with zeros and V_n(A_0..A_k, 0..0) = A_0^(n-k) V_k(A_0..A_k).
    """
    if A.is_zero():
        raise InputError("V form of the zero polynomial")
    k = int(A.degree)
    z = _roots_for(A, roots) if k else []
    prod = 1 + 0j
    for i in range(k):
        for j in range(i + 1, k):
            prod *= z[i] * z[j] - 1
    value = float(A.leading) ** (k - 1) * prod if k else 1 + 0j
    if n is not None and n > k:
        value *= float(A[0]) ** (n - k)
    return complex(value)


def v3_explicit(A0, A1, A2, A3) -> Fraction:
    A0, A1, A2, A3 = map(Fraction, (A0, A1, A2, A3))
    return A0**2 - A0 * A2 + A1 * A3 - A3**2


def v4_explicit(A0, A1, A2, A3, A4) -> Fraction:
    A0, A1, A2, A3, A4 = map(Fraction, (A0, A1, A2, A3, A4))
    return (
        A4 * (-A1**2 + A3 * A1 + A4**2 - A4 * A2 - A0 * A4 + 2 * A0 * A2 - A0**2)
        + A0 * (A0**2 - A0 * A2 + A1 * A3 - A3**2)
    )


def v_form_vanishes(A: RatPoly) -> bool:
    """Exact test of V_n(A) = 0, n = deg A.

    Roots at 0, 1 and -1 are divided out exactly. A double root at 1 or -1
    makes a factor (a_i a_j - 1) vanish; the remaining cross factors are
    -1, -2, b - 1 or -b - 1 and never vanish. For the remaining part Q,
    Res(Q, Q*) = (-1)^q Q(1) Q(-1) V_q(Q)^2 with Q(1) Q(-1) != 0.
    """
    if A.is_zero():
        raise InputError("V form of the zero polynomial")
    Q = A
    while Q.degree >= 1 and Q[0] == 0:
        Q = RatPoly(Q.coeffs[1:])
    for r in (1, -1):
        mult = 0
        while Q.degree >= 1 and Q(r) == 0:
            Q, _ = Q.divide_linear(r)
            mult += 1
        if mult >= 2:
            return True
    if Q.degree <= 1:
        return False
    return self_reciprocal_resultant(Q) == 0

