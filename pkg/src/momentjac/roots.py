"""Simultaneous polynomial root finding (Aberth-Ehrlich iteration)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericalFailure
from .polycore import RatPoly

MAX_ITER = 500
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RootSet:
    """Roots of a real polynomial with multiplicity, plus quality figures.

    ``residual_bound`` is max |p(z)| / max(1, |z|)**deg over the roots, so
    large roots are judged on the reversed polynomial. ``margin`` is the
    smallest distance of a root modulus from 1.
    """

    roots: tuple[complex, ...]
    residual_bound: float
    margin: float
    iterations: int = 0

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __getitem__(self, i: int) -> complex:
        return self.roots[i]

    def certified(self, scale: float = 1.0, tol: float = 1e-11) -> bool:
        return self.residual_bound <= tol * (1.0 + scale)


def _scaled_residual(c_desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    deg = len(c_desc) - 1
    return np.abs(np.polyval(c_desc, z)) / np.maximum(1.0, np.abs(z)) ** deg


def _pair_conjugates(z: np.ndarray) -> np.ndarray:
    """Enforce conjugate symmetry by averaging matched pairs.

    Unmatched roots with a negligible imaginary part are snapped to the real axis.
    """
    z = z.copy()
    upper = sorted((i for i in range(len(z)) if z[i].imag > 0), key=lambda i: -z[i].imag)
    lower = [i for i in range(len(z)) if z[i].imag < 0]
    paired: set[int] = set()
    for i in upper:
        free = [j for j in lower if j not in paired]
        if not free:
            break
        j = min(free, key=lambda j: abs(z[i] - np.conj(z[j])))
        if abs(z[i] - np.conj(z[j])) > 1e-6 * max(1.0, abs(z[i])):
            continue
        avg = 0.5 * (z[i] + np.conj(z[j]))
        if abs(avg.imag) <= 1e-13 * max(1.0, abs(avg)):
            avg = complex(avg.real, 0.0)
        z[i], z[j] = avg, np.conj(avg)
        paired.update((i, j))
    for i in range(len(z)):
        if i not in paired and abs(z[i].imag) <= 1e-6 * max(1.0, abs(z[i])):
            z[i] = complex(z[i].real, 0.0)
    return z


def find_roots(p: RatPoly, max_iter: int = MAX_ITER) -> RootSet:
    """All complex roots of ``p`` with multiplicity.

    Starts from points on the Cauchy-bound circle and runs Aberth's
    simultaneous correction until the largest step is below 1e-14 times the
    radius or every root is backward-stable; a final guarded Newton step
    polishes each root.
    """
    if p.is_zero():
        raise InputError("the zero polynomial has no finite root set")
    coeffs = list(p.coeffs)
    zeros_at_origin = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zeros_at_origin += 1
    m = len(coeffs) - 1
    if m == 0:
        roots = np.zeros(zeros_at_origin, dtype=complex)
        return _finish(p, roots, 0)

    c_desc = np.array([float(c) for c in reversed(coeffs)], dtype=float)
    c_desc = c_desc / c_desc[0]
    d_desc = np.polyder(c_desc)
    abs_desc = np.abs(c_desc)
    radius = 1.0 + float(np.max(abs_desc[1:]))

    angles = 2.0 * math.pi * np.arange(m) / m + 0.4
    z = radius * np.exp(1j * angles)
    it = 0
    for it in range(1, max_iter + 1):
        pv = np.polyval(c_desc, z)
        dv = np.polyval(d_desc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        offsets = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            step = ratio / (1.0 - ratio * offsets)
        step = np.where(np.isfinite(step), step, 0.0)
        step = np.where(pv == 0, 0.0, step)
        z = z - step
        if np.max(np.abs(step)) < 1e-14 * radius:
            break
        bound = 8.0 * _EPS * np.polyval(abs_desc, np.abs(z))
        if np.all(np.abs(np.polyval(c_desc, z)) <= bound):
            break
    else:
        raise NumericalFailure(f"Aberth iteration did not converge in {max_iter} steps")

    pv = np.polyval(c_desc, z)
    dv = np.polyval(d_desc, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        polished = z - pv / dv
    ok = np.isfinite(polished) & (np.abs(np.polyval(c_desc, polished)) < np.abs(pv))
    z = np.where(ok, polished, z)

    z = _pair_conjugates(z)
    roots = np.concatenate([np.zeros(zeros_at_origin, dtype=complex), z])
    return _finish(p, roots, it)


def _finish(p: RatPoly, roots: np.ndarray, iterations: int) -> RootSet:
    c_desc = np.array([float(c) for c in reversed(p.coeffs)], dtype=float)
    if len(roots):
        residual = float(np.max(_scaled_residual(c_desc, roots)))
        margin = float(np.min(np.abs(np.abs(roots) - 1.0)))
    else:
        residual, margin = 0.0, math.inf
    roots_t = tuple(complex(r) for r in roots)
    bound = 1e-11 * (1.0 + float(np.max(np.abs(c_desc))))
    if residual > bound:
        raise NumericalFailure(
            f"root residual {residual:.3e} exceeds certification bound {bound:.3e}"
        )
    return RootSet(roots_t, residual, margin, iterations)
