"""
Dyadic Approximation Module
Lagroot - Certified Polynomial Root Finding

Dyadic numbers m*2^e carry one-sided bounds on irrational quantities
(square roots, absolute values). Every helper here states which side it
rounds to; nothing rounds to nearest unless the name says so.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Tuple

from ..utils.errors import ArithmeticDomainError, ParseError
from .gaussian import GaussianRational, GaussLike
from .rational import RationalLike, as_rational, power_of_two


_DYADIC_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:\*\s*2\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?\s*$")


@dataclass(frozen=True, slots=True, order=False)
class Dyadic:
    """Canonical mantissa*2^exponent with an odd mantissa (or zero, exponent 0)."""

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, e = self.mantissa, self.exponent
        if m == 0:
            e = 0
        else:
            shift = (m & -m).bit_length() - 1
            m >>= shift
            e += shift
        object.__setattr__(self, 'mantissa', m)
        object.__setattr__(self, 'exponent', e)

    @classmethod
    def from_scaled(cls, scaled: int, bits: int) -> "Dyadic":
        """The value scaled / 2^bits."""
        return cls(scaled, -bits)

    def to_fraction(self) -> Fraction:
        return self.mantissa * power_of_two(self.exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other) -> bool:
        return self.to_fraction() < _value(other)

    def __le__(self, other) -> bool:
        return self.to_fraction() <= _value(other)

    def __gt__(self, other) -> bool:
        return self.to_fraction() > _value(other)

    def __ge__(self, other) -> bool:
        return self.to_fraction() >= _value(other)

    def __str__(self) -> str:
        return format_dyadic(self)


def _value(x) -> Fraction:
    if isinstance(x, Dyadic):
        return x.to_fraction()
    return as_rational(x)


def parse_dyadic(text: str) -> Dyadic:
    """Parse "m*2^e" (or a bare integer m)."""
    match = _DYADIC_PATTERN.match(text)
    if match is None:
        raise ParseError(f"not a dyadic literal: {text!r}")
    mantissa, exponent = match.groups()
    return Dyadic(int(mantissa), int(exponent) if exponent is not None else 0)


def format_dyadic(x: Dyadic) -> str:
    return f"{x.mantissa}*2^{x.exponent}"


def sqrt_bounds(q: RationalLike, t: int) -> Tuple[Dyadic, Dyadic]:
    """
    Bracket sqrt(q) between dyadics on the grid 2^-t.

    Args:
        q: Non-negative rational
        t: Precision; hi - lo <= 2^-t

    Returns:
        (lo, hi) with lo^2 <= q <= hi^2

    Raises:
        ArithmeticDomainError: if q < 0
    """
    q = as_rational(q)
    if q < 0:
        raise ArithmeticDomainError("square root of a negative rational")
    if q == 0:
        return Dyadic(0), Dyadic(0)
    if t >= 0:
        num, den = q.numerator << (2 * t), q.denominator
    else:
        num, den = q.numerator, q.denominator << (-2 * t)

    low = isqrt(num // den)
    m_ceil = -(-num // den)
    high = isqrt(m_ceil)
    if high * high < m_ceil:
        high += 1
    if low * low * den == num:
        high = low
    return Dyadic(low, -t), Dyadic(high, -t)


def abs_bounds(z: GaussLike, t: int) -> Tuple[Dyadic, Dyadic]:
    """(lo, hi) with lo <= |z| <= hi and hi - lo <= 2^-t."""
    return sqrt_bounds(GaussianRational.coerce(z).norm_sq(), t)


def _relative_scale(q: Fraction, rel_bits: int) -> int:
    """Absolute precision giving about rel_bits significant bits of sqrt(q)."""
    magnitude = (q.numerator.bit_length() - q.denominator.bit_length()) // 2
    return rel_bits - magnitude + 2


def sqrt_upper(q: RationalLike, rel_bits: int = 16) -> Fraction:
    """Rational upper bound on sqrt(q), relatively tight for any magnitude."""
    q = as_rational(q)
    if q == 0:
        return Fraction(0)
    return sqrt_bounds(q, _relative_scale(q, rel_bits))[1].to_fraction()


def sqrt_lower(q: RationalLike, rel_bits: int = 16) -> Fraction:
    """Rational lower bound on sqrt(q); strictly positive when q > 0."""
    q = as_rational(q)
    if q == 0:
        return Fraction(0)
    return sqrt_bounds(q, _relative_scale(q, rel_bits))[0].to_fraction()


def abs_upper(z: GaussLike, rel_bits: int = 16) -> Fraction:
    return sqrt_upper(GaussianRational.coerce(z).norm_sq(), rel_bits)


def abs_lower(z: GaussLike, rel_bits: int = 16) -> Fraction:
    return sqrt_lower(GaussianRational.coerce(z).norm_sq(), rel_bits)


def round_to_lattice(z: GaussLike, bits: int) -> GaussianRational:
    """
    Nearest point of 2^-bits Z[i], ties toward +infinity.

    The result is within 2^-(bits+1) of z in each coordinate.
    """
    z = GaussianRational.coerce(z)
    scale = Fraction(1 << bits) if bits >= 0 else Fraction(1, 1 << -bits)
    half = Fraction(1, 2)
    re = floor(z.re * scale + half)
    im = floor(z.im * scale + half)
    return GaussianRational(Fraction(re) / scale, Fraction(im) / scale)
