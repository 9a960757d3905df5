"""
Dense Polynomial Module
Lagroot - Certified Polynomial Root Finding

Univariate polynomials over Q(i) stored as dense coefficient tuples
(index j holds the coefficient of x^j). Instances are immutable and
hashable so pipeline stages can cache per-polynomial results.
"""

from dataclasses import dataclass
from math import comb, lcm
from typing import Iterable, List, Tuple, Union

from ..arithmetic import ONE, ZERO, GaussianRational, format_gaussian
from ..arithmetic.gaussian import GaussLike
from ..utils.errors import ArithmeticDomainError


@dataclass(frozen=True)
class Poly:
    """Immutable dense polynomial; the zero polynomial has no coefficients."""

    coeffs: Tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        coeffs = [GaussianRational.coerce(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    # constructors

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[GaussLike]) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: GaussLike) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((ZERO, ONE))

    @classmethod
    def from_roots(cls, roots: Iterable[GaussLike], lead: GaussLike = 1) -> "Poly":
        """lead * prod(x - r)."""
        result = cls.constant(lead)
        for r in roots:
            result = result * cls((-GaussianRational.coerce(r), ONE))
        return result

    # structure

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coefficient(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, j: int) -> GaussianRational:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    # evaluation and calculus

    def evaluate(self, z: GaussLike) -> GaussianRational:
        """Horner evaluation at z."""
        z = GaussianRational.coerce(z)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    __call__ = evaluate

    def derivative(self) -> "Poly":
        return Poly(tuple(c * j for j, c in enumerate(self.coeffs) if j > 0))

    def nth_derivative(self, r: int) -> "Poly":
        f = self
        for _ in range(r):
            f = f.derivative()
        return f

    def taylor_shift(self, a: GaussLike) -> "Poly":
        """
        Return g with g(z) = f(z + a).

        Coefficient h is sum_{u >= h} C(u, h) f_u a^(u-h).
        """
        a = GaussianRational.coerce(a)
        d = self.degree
        if d < 1 or a.is_zero():
            return self
        powers = [ONE]
        for _ in range(d):
            powers.append(powers[-1] * a)
        shifted = []
        for h in range(d + 1):
            acc = ZERO
            for u in range(h, d + 1):
                if not self.coeffs[u].is_zero():
                    acc = acc + self.coeffs[u] * powers[u - h] * comb(u, h)
            shifted.append(acc)
        return Poly(tuple(shifted))

    def compose_linear(self, alpha: GaussLike, beta: GaussLike) -> "Poly":
        """Return f(alpha*z + beta)."""
        alpha = GaussianRational.coerce(alpha)
        shifted = self.taylor_shift(beta)
        scale = ONE
        coeffs = []
        for c in shifted.coeffs:
            coeffs.append(c * scale)
            scale = scale * alpha
        return Poly(tuple(coeffs))

    def conj_reflect(self) -> "Poly":
        """Return h with h(z) = conj(f)(-z), i.e. coefficients conj(f_j)*(-1)^j."""
        return Poly(tuple(c.conjugate() if j % 2 == 0 else -c.conjugate()
                          for j, c in enumerate(self.coeffs)))

    # ring operations

    def __add__(self, other: Union["Poly", GaussLike]) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[j] + other[j] for j in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Poly", GaussLike]) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: GaussLike) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["Poly", GaussLike]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out: List[GaussianRational] = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def __rmul__(self, other: GaussLike) -> "Poly":
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ArithmeticDomainError("negative polynomial power")
        result, base = Poly.constant(ONE), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: GaussLike) -> "Poly":
        c = GaussianRational.coerce(c)
        return Poly(tuple(x * c for x in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ArithmeticDomainError("zero polynomial has no monic form")
        return self.scale(self.leading_coefficient.reciprocal())

    def divrem(self, g: "Poly") -> Tuple["Poly", "Poly"]:
        """
        Long division f = q*g + r with deg r < deg g.

        Raises:
            ArithmeticDomainError: if g is the zero polynomial
        """
        if g.is_zero():
            raise ArithmeticDomainError("polynomial division by zero")
        dg = g.degree
        rem = list(self.coeffs)
        if self.degree < dg:
            return Poly(), self
        quot: List[GaussianRational] = [ZERO] * (self.degree - dg + 1)
        lc_inv = g.leading_coefficient.reciprocal()
        for k in range(self.degree - dg, -1, -1):
            c = rem[k + dg] * lc_inv
            quot[k] = c
            if c.is_zero():
                continue
            for j in range(dg + 1):
                rem[k + j] = rem[k + j] - c * g.coeffs[j]
        return Poly(tuple(quot)), Poly(tuple(rem[:dg]))

    def __floordiv__(self, g: "Poly") -> "Poly":
        return self.divrem(g)[0]

    def __mod__(self, g: "Poly") -> "Poly":
        return self.divrem(g)[1]

    def divides(self, other: "Poly") -> bool:
        """True if self | other."""
        return other.divrem(self)[1].is_zero()

    def is_square_free(self) -> bool:
        if self.is_constant():
            return True
        return poly_gcd(self, self.derivative()).degree == 0

    # exact integer view

    def integer_form(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """
        Clear denominators.

        Returns:
            (D, coefficients) with D > 0 and D*f_j = re_j + im_j*i in Z[i]
        """
        dens = [c.re.denominator for c in self.coeffs] + [c.im.denominator for c in self.coeffs]
        common = lcm(*dens) if dens else 1
        ints = tuple((int(c.re * common), int(c.im * common)) for c in self.coeffs)
        return common, ints

    def __str__(self) -> str:
        return format_poly(self)


def _as_poly(value: Union[Poly, GaussLike]) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def evaluate(f: Poly, z: GaussLike) -> GaussianRational:
    return f.evaluate(z)


def derivative(f: Poly) -> Poly:
    return f.derivative()


def taylor_shift(f: Poly, a: GaussLike) -> Poly:
    return f.taylor_shift(a)


def divrem(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    return f.divrem(g)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """
    Monic greatest common divisor by the Euclidean algorithm.

    Raises:
        ArithmeticDomainError: if both inputs are zero
    """
    if f.is_zero() and g.is_zero():
        raise ArithmeticDomainError("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero():
        a, b = b.monic(), a.divrem(b)[1]
    return a.monic()


def _coefficient_literal(c: GaussianRational) -> str:
    text = format_gaussian(c)
    if c.re != 0 and c.im != 0:
        return f"({text})"
    return text


def format_poly(f: Poly) -> str:
    """Render as "c_d*x^d + ... + c_0", parseable by parse_poly."""
    if f.is_zero():
        return "0"
    parts: List[str] = []
    for j in range(f.degree, -1, -1):
        c = f.coeffs[j]
        if c.is_zero():
            continue
        monomial = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        literal = _coefficient_literal(c)
        if monomial and c == 1:
            term = monomial
        elif monomial and c == -1:
            term = f"-{monomial}"
        elif monomial:
            term = f"{literal}*{monomial}"
        else:
            term = literal
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)
