"""
Gaussian Rational Arithmetic Module
Lagroot - Certified Polynomial Root Finding

Exact arithmetic in Q(i). Values are immutable and interoperate with int and
Fraction operands, so polynomial code can mix scalars freely.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..utils.errors import ArithmeticDomainError, ParseError
from .rational import as_rational, format_rational


_TERM_PATTERN = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<num>\d+)?(?:\s*/\s*(?P<den>\d+))?\s*(?P<unit>\*\s*i|i)?\s*"
)


@dataclass(frozen=True, eq=False, slots=True)
class GaussianRational:
    """A complex number re + im*i with exact rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, 're', as_rational(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, 'im', as_rational(self.im))

    @classmethod
    def coerce(cls, value: "GaussLike") -> "GaussianRational":
        """Lift an int, Fraction or GaussianRational into Q(i)."""
        if isinstance(value, GaussianRational):
            return value
        return cls(as_rational(value))

    # predicates

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # field operations

    def __add__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ArithmeticDomainError("Gaussian division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other: "GaussLike") -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) * self.reciprocal()
        return NotImplemented

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, k: int) -> "GaussianRational":
        return gauss_pow(self, k)

    def reciprocal(self) -> "GaussianRational":
        n = self.norm_sq()
        if n == 0:
            raise ArithmeticDomainError("Gaussian division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianRational({format_gaussian(self)!r})"


GaussLike = Union[int, Fraction, GaussianRational]

ZERO = GaussianRational(Fraction(0))
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def norm_sq(x: GaussLike) -> Fraction:
    """|x|^2 = re^2 + im^2, exactly."""
    return GaussianRational.coerce(x).norm_sq()


def conj(x: GaussLike) -> GaussianRational:
    """Complex conjugate."""
    return GaussianRational.coerce(x).conjugate()


def gauss_div(x: GaussLike, y: GaussLike) -> GaussianRational:
    """
    Exact quotient x * conj(y) / norm_sq(y).

    Raises:
        ArithmeticDomainError: if y == 0
    """
    return GaussianRational.coerce(x) * GaussianRational.coerce(y).reciprocal()


def gauss_pow(x: GaussLike, k: int) -> GaussianRational:
    """x^k for k >= 0 by repeated squaring; x^0 = 1 including 0^0."""
    if k < 0:
        raise ArithmeticDomainError("negative exponent")
    base = GaussianRational.coerce(x)
    result = ONE
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def parse_gaussian(text: str) -> GaussianRational:
    """
    Parse "p/q+r/s*i" and its shorter forms ("3", "-i", "1/4*i", "2-i").

    Raises:
        ParseError: on malformed text
    """
    pos, end = 0, len(text)
    re_part, im_part = Fraction(0), Fraction(0)
    first = True
    if not text.strip():
        raise ParseError("empty Gaussian literal")
    while pos < end:
        match = _TERM_PATTERN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"not a Gaussian literal: {text!r}")
        sign, num, den, unit = match.group('sign', 'num', 'den', 'unit')
        if num is None and unit is None:
            if match.group(0).strip():
                raise ParseError(f"dangling sign in {text!r}")
            break
        if sign is None and not first:
            raise ParseError(f"missing operator in {text!r}")
        if den is not None and num is None:
            raise ParseError(f"missing numerator in {text!r}")
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        value = Fraction(int(num) if num is not None else 1, int(den) if den is not None else 1)
        if sign == '-':
            value = -value
        if unit is None:
            re_part += value
        else:
            im_part += value
        first = False
        pos = match.end()
    if first:
        raise ParseError(f"not a Gaussian literal: {text!r}")
    return GaussianRational(re_part, im_part)


def format_gaussian(z: GaussLike) -> str:
    """Render in the "p/q+r/s*i" form accepted by parse_gaussian."""
    z = GaussianRational.coerce(z)
    if z.im == 0:
        return format_rational(z.re)

    magnitude = abs(z.im)
    imag = "i" if magnitude == 1 else f"{format_rational(magnitude)}*i"
    if z.re == 0:
        return imag if z.im > 0 else f"-{imag}"
    return f"{format_rational(z.re)}{'+' if z.im > 0 else '-'}{imag}"
