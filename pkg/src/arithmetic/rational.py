"""
Rational Arithmetic Module
Lagroot - Certified Polynomial Root Finding

Exact rationals are ``fractions.Fraction`` values, always kept in lowest
terms with a positive denominator. This module adds the pieces Fraction does
not provide: a division that reports the library's own domain error, a
three-way comparison, the text format, and floors of scaled rationals.
"""

import re
from fractions import Fraction
from typing import Union

from ..utils.errors import ArithmeticDomainError, ParseError


Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction (bools and floats are rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def rat_div(x: RationalLike, y: RationalLike) -> Fraction:
    """
    Exact quotient x / y.

    Raises:
        ArithmeticDomainError: if y == 0
    """
    y = as_rational(y)
    if y == 0:
        raise ArithmeticDomainError("rational division by zero")
    return as_rational(x) / y


def rat_cmp(x: RationalLike, y: RationalLike) -> int:
    """Total order on rationals: -1, 0 or 1."""
    x, y = as_rational(x), as_rational(y)
    return (x > y) - (x < y)


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or "p" into a canonical Fraction.

    Raises:
        ParseError: on malformed text or a zero denominator
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise ParseError(f"not a rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: RationalLike) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dyadic_floor_scaled(q: RationalLike, t: int) -> int:
    """
    Return floor(q * 2^t) exactly, rounding toward minus infinity.

    Args:
        q: Rational value
        t: Binary scale (may be negative)

    Returns:
        The integer floor
    """
    q = as_rational(q)
    if t >= 0:
        return (q.numerator << t) // q.denominator
    return q.numerator // (q.denominator << -t)


def ceil_log2(x: RationalLike) -> int:
    """Smallest integer e with x <= 2^e, for x > 0."""
    x = as_rational(x)
    if x <= 0:
        raise ArithmeticDomainError("ceil_log2 of a non-positive rational")
    e = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** e < x:
        e += 1
    while Fraction(2) ** (e - 1) >= x:
        e -= 1
    return e


def floor_log2(x: RationalLike) -> int:
    """Largest integer e with 2^e <= x, for x > 0."""
    x = as_rational(x)
    if x <= 0:
        raise ArithmeticDomainError("floor_log2 of a non-positive rational")
    e = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** e > x:
        e -= 1
    while Fraction(2) ** (e + 1) <= x:
        e += 1
    return e


def power_of_two(e: int) -> Fraction:
    """2^e as an exact rational, for any integer e."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)
