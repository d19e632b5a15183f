"""Exact dense polynomials and finite Laurent series over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import InputError

Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial. Comparisons behave like -infinity.
ZERO_DEGREE = -math.inf


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


@dataclass(frozen=True)
class RatPoly:
    """Dense univariate polynomial; ``coeffs[j]`` is the coefficient of z**j.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree ``ZERO_DEGREE``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, j: int, c: Scalar = 1) -> RatPoly:
        return cls([0] * j + [c])

    @classmethod
    def parse(cls, text: str) -> RatPoly:
        """Parse ``"0,1,1/4"`` (constant term first) into a polynomial."""
        parts = [s for s in text.split(",")]
        if not parts or any(not s.strip() for s in parts):
            raise InputError(f"malformed coefficient list: {text!r}")
        return cls(Fraction(s.strip()) for s in parts)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other) -> RatPoly:
        other = _as_poly(other)
        size = max(len(self), len(other))
        return RatPoly(self[j] + other[j] for j in range(size))

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> RatPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> RatPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> RatPoly:
        if not isinstance(other, RatPoly):
            c = _frac(other)
            return RatPoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RatPoly:
        if k < 0:
            raise InputError("negative powers are not polynomials")
        result = RatPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def truncate(self, top: int) -> RatPoly:
        """Drop every term of degree above ``top``."""
        return RatPoly(self.coeffs[: top + 1])

    def mul_truncated(self, other: RatPoly, top: int) -> RatPoly:
        out = [Fraction(0)] * (top + 1)
        for i, a in enumerate(self.coeffs[: top + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: top + 1 - i]):
                out[i + j] += a * b
        return RatPoly(out)

    def divide_linear(self, root: Scalar) -> tuple[RatPoly, Fraction]:
        """Synthetic division by ``z - root``; returns (quotient, remainder)."""
        root = _frac(root)
        if len(self) <= 1:
            return RatPoly(), self[0]
        quot = [Fraction(0)] * (len(self) - 1)
        carry = Fraction(0)
        for j in range(len(self) - 1, 0, -1):
            carry = carry * root + self.coeffs[j]
            quot[j - 1] = carry
        return RatPoly(quot), carry * root + self.coeffs[0]

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                coef = str(c) if c.denominator == 1 else f"({c})"
                terms.append(coef + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


@dataclass(frozen=True)
class LaurentSeries:
    """Finite Laurent polynomial: a map from integer exponent to coefficient.

    Absent exponents have coefficient zero; zero coefficients are never stored.
    """

    terms: Mapping[int, Fraction]

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {int(m): _frac(c) for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def from_poly(cls, p: RatPoly, shift: int = 0) -> LaurentSeries:
        return cls({j + shift: c for j, c in enumerate(p.coeffs)})

    @classmethod
    def monomial(cls, m: int, c: Scalar = 1) -> LaurentSeries:
        return cls({m: c})

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.terms == other.terms

    def coeff(self, m: int) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentSeries(out)

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        return self + (-other)

    def __mul__(self, other) -> LaurentSeries:
        if not isinstance(other, LaurentSeries):
            c = _frac(other)
            return LaurentSeries({m: c * v for m, v in self.terms.items()})
        out: dict[int, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
        return LaurentSeries(out)

    __rmul__ = __mul__

    def shift(self, s: int) -> LaurentSeries:
        """Multiply by z**s."""
        return LaurentSeries({m + s: c for m, c in self.terms.items()})

    def exponent_range(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        keys = list(self.terms)
        return keys[0], keys[-1]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})z^{m}" for m, c in self.terms.items())


def derivative(p: RatPoly) -> RatPoly:
    return RatPoly(j * c for j, c in enumerate(p.coeffs) if j > 0)


def reciprocal(a: RatPoly, p: int) -> RatPoly:
    """Return z**p * a(1/z), the coefficient reversal in a window of p + 1."""
    if p < 0 or a.degree > p:
        raise InputError(f"window {p} is smaller than degree {a.degree}")
    padded = list(a.coeffs) + [Fraction(0)] * (p + 1 - len(a))
    return RatPoly(reversed(padded))


def mobius_transform(r: RatPoly) -> RatPoly:
    """Expand (z + 1)**m * r((z - 1)/(z + 1)) with m = deg r.

    Roots map by z0 -> (1 + z0)/(1 - z0); the leading coefficient is r(1).
    """
    if r.is_zero():
        raise InputError("Moebius transform of the zero polynomial")
    m = r.degree
    zm1 = RatPoly([-1, 1])
    zp1 = RatPoly([1, 1])
    out = RatPoly()
    for j, c in enumerate(r.coeffs):
        if c:
            out = out + c * (zm1 ** j) * (zp1 ** (m - j))
    return out


def laurent_coeff(f: LaurentSeries, m: int) -> Fraction:
    """Coefficient of z**m, i.e. the residue of f(z) z**(-1-m) at 0."""
    return f.coeff(m)


def substitute_inverse(p: RatPoly) -> LaurentSeries:
    """p(1/z) as a Laurent series in non-positive exponents."""
    return LaurentSeries({-j: c for j, c in enumerate(p.coeffs)})


def check_moment_polynomial(p: RatPoly, require_positive_a1: bool = True) -> int:
    """Validate a polynomial used as a moment-map argument; return its degree."""
    if p.is_zero():
        raise InputError("zero polynomial has no moments")
    if p[0] != 0:
        raise InputError("nonzero constant term: the moment map needs P(0) = 0")
    if require_positive_a1 and p[1] <= 0:
        raise InputError("leading linear coefficient a_1 must be positive")
    return int(p.degree)
