"""
Root Bounds Module
Lagroot - Certified Polynomial Root Finding

Cauchy's annulus for root moduli, the total bit size of a polynomial, and
the resulting lower bound on the distance between distinct roots of two
polynomials.
"""

from fractions import Fraction
from typing import Optional, Tuple

from ..arithmetic import sqrt_bounds
from ..utils.config import get_config
from ..utils.errors import ConstantPolynomialError
from .poly import Poly


def _ratio_upper(num_sq: Fraction, den_sq: Fraction, bits: int) -> Fraction:
    """Upper bound on sqrt(num_sq / den_sq) at 2^-bits."""
    return sqrt_bounds(num_sq / den_sq, bits)[1].to_fraction()


def max_coefficient_ratio(f: Poly, bits: Optional[int] = None) -> Fraction:
    """Rational upper bound on max_{j<d} |f_j| / |f_d|."""
    if f.is_constant():
        raise ConstantPolynomialError("coefficient ratio needs a nonconstant polynomial")
    if bits is None:
        bits = get_config().get_solver_setting('bounds', 'abs_precision', 8)
    lead = f.leading_coefficient.norm_sq()
    return max(_ratio_upper(c.norm_sq(), lead, bits) for c in f.coeffs[:-1])


def cauchy_bounds(f: Poly, bits: Optional[int] = None) -> Tuple[Fraction, Fraction]:
    """
    Annulus lo <= |alpha| <= hi containing every root alpha of f.

    hi = 1 + max_{j<d} |a_j|/|a_d| is rounded up; lo = |a_0|/(|a_0| + max_{j>0} |a_j|)
    is evaluated as 1/(1 + max_{j>0} |a_j|/|a_0|) with the inner ratio rounded
    up, so lo only moves down.

    Args:
        f: Nonconstant polynomial
        bits: Fractional bits for the magnitude ratios

    Returns:
        (lo, hi) as rationals
    """
    if f.is_constant():
        raise ConstantPolynomialError("Cauchy bounds need a nonconstant polynomial")
    if bits is None:
        bits = get_config().get_solver_setting('bounds', 'abs_precision', 8)

    hi = 1 + max_coefficient_ratio(f, bits)

    constant = f.coeffs[0].norm_sq()
    if constant == 0:
        return Fraction(0), hi
    ratio = max(_ratio_upper(c.norm_sq(), constant, bits) for c in f.coeffs[1:])
    return 1 / (1 + ratio), hi


def bit_size(f: Poly) -> int:
    """
    Total bit size: for each coefficient, the bit lengths of its four
    integers (real numerator, real denominator, imaginary numerator,
    imaginary denominator), plus one sign bit each.
    """
    total = 0
    for c in f.coeffs:
        for n in (c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator):
            total += abs(n).bit_length() + 1
    return max(total, 1)


def separation_exponent(f0: Poly, f1: Poly) -> int:
    """d1*n0 + d0*n1, the exponent of the separation bound."""
    if f0.is_constant() or f1.is_constant():
        raise ConstantPolynomialError("separation bound needs nonconstant polynomials")
    return f1.degree * bit_size(f0) + f0.degree * bit_size(f1)


def separation_bound(f0: Poly, f1: Poly) -> Fraction:
    """
    2^-(d1*n0 + d0*n1): distinct roots of f0 and f1 are at least this far apart.
    """
    return Fraction(1, 1 << separation_exponent(f0, f1))
