"""Membership in the locally univalent class and boundary classification.

P is locally univalent when P' has no zero in the closed unit disk. Root
moduli are floating point, but every verdict that hinges on a root lying
on the circle is settled by exact rational tests: Res(P', P'*) vanishes iff
P' has a zero on the circle or a pair of zeros w, 1/w, and the surfaces
are decided by P'(1) = 0, P'(-1) = 0 and V_{n-1}(P') = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import InputError, RouteMismatch
from .hurwitz import sylvester_resultant, v3_explicit, v4_explicit, v_form_vanishes
from .polycore import RatPoly, check_moment_polynomial, derivative, reciprocal
from .roots import RootSet, find_roots

__all__ = [
    "Classification",
    "RootSet",
    "SamplerExhausted",
    "UnivalenceReport",
    "classify",
    "find_roots",
    "is_locally_univalent",
    "random_polynomial",
    "sample_interior",
]

INTERIOR, BOUNDARY, EXTERIOR = "Interior", "Boundary", "Exterior"
PI_PLUS, PI_MINUS, CURVED = "Pi+", "Pi-", "A"

MARGIN_TOL = 1e-9
# Multiple zeros on the circle come back from the root finder off the circle
# by roughly eps**(1/multiplicity); anything closer than this counts as on it.
CIRCLE_TOL = 1e-6


class SamplerExhausted(InputError):
    """Rejection sampling accepted nothing within the trial budget."""


@dataclass(frozen=True)
class Classification:
    verdict: str
    surfaces: frozenset = frozenset()
    witness: dict = field(default_factory=dict)
    margin: float = math.inf
    roots: RootSet | None = None

    def label(self) -> str:
        if self.verdict != BOUNDARY:
            return self.verdict
        order = [s for s in (PI_PLUS, PI_MINUS, CURVED) if s in self.surfaces]
        return f"{BOUNDARY}{{{', '.join(order)}}}"


class UnivalenceReport(NamedTuple):
    locally_univalent: bool
    margin: float
    escalated: bool


def reciprocal_resultant(dP: RatPoly) -> Fraction:
    """Res(P', P'*) with both taken at formal degree deg P'."""
    m = int(dP.degree)
    return sylvester_resultant(dP, reciprocal(dP, m), m, m)


def _min_modulus(roots: RootSet) -> float:
    return min((abs(z) for z in roots), default=math.inf)


def is_locally_univalent(P: RatPoly) -> UnivalenceReport:
    """True iff every zero of P' lies strictly outside the closed unit disk.

    ``margin`` is min |w| - 1 over the zeros w of P'. When it is within
    1e-9 of zero the answer comes from the exact resultant test instead.
    """
    n = check_moment_polynomial(P, require_positive_a1=False)
    if P[1] == 0:
        raise InputError("a_1 = P'(0) must be nonzero")
    dP = derivative(P)
    if n == 1:
        return UnivalenceReport(True, math.inf, False)
    roots = find_roots(dP)
    margin = _min_modulus(roots) - 1.0
    if abs(margin) > MARGIN_TOL:
        return UnivalenceReport(margin > 0, margin, False)
    if reciprocal_resultant(dP) == 0:
        # A zero sits on the circle (or pairs with its reflection); not in the open class.
        return UnivalenceReport(False, margin, True)
    return UnivalenceReport(margin > 0, margin, True)


def _curved(dP: RatPoly) -> bool:
    """V_{n-1}(P') = 0, cross-checked against the closed forms in degrees 3 and 4."""
    vanishes = v_form_vanishes(dP)
    explicit = {3: v3_explicit, 4: v4_explicit}.get(int(dP.degree))
    if explicit is not None and (explicit(*dP.coeffs) == 0) != vanishes:
        raise RouteMismatch("explicit V form disagrees with the exact vanishing test")
    return vanishes


def classify(P: RatPoly) -> Classification:
    n = check_moment_polynomial(P)
    dP = derivative(P)
    p_plus, p_minus = dP(1), dP(-1)
    res = reciprocal_resultant(dP) if n > 1 else Fraction(1)
    witness = {"P'(1)": p_plus, "P'(-1)": p_minus, "Res(P',P'*)": res}
    if n == 1:
        return Classification(INTERIOR, frozenset(), witness, math.inf, find_roots(dP))

    roots = find_roots(dP)
    margin = _min_modulus(roots) - 1.0
    if res != 0:
        # No zero on the circle, so the float moduli separate cleanly.
        verdict = INTERIOR if margin > 0 else EXTERIOR
        return Classification(verdict, frozenset(), witness, margin, roots)

    if any(abs(z) < 1.0 - CIRCLE_TOL for z in roots):
        return Classification(EXTERIOR, frozenset(), witness, margin, roots)
    surfaces = set()
    if p_plus == 0:
        surfaces.add(PI_PLUS)
    if p_minus == 0:
        surfaces.add(PI_MINUS)
    if _curved(dP):
        surfaces.add(CURVED)
    return Classification(BOUNDARY, frozenset(surfaces), witness, margin, roots)


def random_polynomial(n: int, rng: np.random.Generator) -> RatPoly:
    """Random P with a_1 in (0, 10], a_2..a_n in [-10, 10], denominators <= 64.

    a_j is drawn uniformly inside an envelope 10 * s**(j-1), where the decay
    s is itself uniform on (0.05, 1] per polynomial; s near 1 gives plain
    uniform coefficients. a_n is never zero.
    """
    if n < 1:
        raise InputError("degree must be at least 1")
    decay = float(rng.uniform(0.05, 1.0))

    def draw(bound: float, positive: bool = False) -> Fraction:
        d = int(rng.integers(1, 65))
        top = max(1, int(bound * d))
        lo = 1 if positive else -top
        return Fraction(int(rng.integers(lo, top + 1)), d)

    coeffs = [Fraction(0), draw(10.0, positive=True)]
    for j in range(2, n + 1):
        c = draw(10.0 * decay ** (j - 1))
        while j == n and c == 0:
            c = draw(10.0 * decay ** (j - 1))
        coeffs.append(c)
    return RatPoly(coeffs)


def _monic_discriminant(roots: RootSet) -> float:
    w = list(roots)
    out = 1.0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            out *= abs(w[i] - w[j]) ** 2
    return out


def sample_interior(n: int, seed: int, trials: int, count: int | None = None) -> list[RatPoly]:
    """Rejection-sample locally univalent polynomials of degree n.

    Draws up to ``trials`` candidates from :func:`random_polynomial` with a
    generator seeded by ``seed``; stops early once ``count`` are accepted.
    Candidates whose P' has monic discriminant below 1e-12 are skipped.
    """
    if n < 1:
        raise InputError("degree must be at least 1")
    rng = np.random.default_rng(seed)
    accepted: list[RatPoly] = []
    for _ in range(trials):
        P = random_polynomial(n, rng)
        if n > 1:
            roots = find_roots(derivative(P))
            if _min_modulus(roots) <= 1.0 or _monic_discriminant(roots) < 1e-12:
                continue
        if classify(P).verdict == INTERIOR:
            accepted.append(P)
            if count is not None and len(accepted) >= count:
                break
    if not accepted:
        raise SamplerExhausted(f"no locally univalent sample of degree {n} in {trials} trials")
    return accepted
