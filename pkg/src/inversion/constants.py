"""
Inversion Constants Module
Lagroot - Certified Polynomial Root Finding

Safe rational lower bounds on the degree-dependent constants that control
the local inverse of a degree-d polynomial:

  mu       = 2^(1/(d-1)) - 1             (injectivity radius factor)
  nu       = (2(d-1)mu - 1)/d            (image-disc radius factor)
  lambda_d = (1 + delta*d*nu)^(1/d) - 1  (annulus width, delta = 1/2 by default)

plus the spiderweb parameters A = 1 + lambda/5, p >= 5*pi/lambda and the
spoke directions xi_q ~ exp(2*pi*i*q/p).

Each constant is found by bisection on its defining power inequality, so
the returned value satisfies that inequality exactly. The pair (mu, nu)
stays valid for the convergence bounds whenever nu is derived from the
returned mu.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Callable, Tuple

from ..arithmetic import GaussianRational, ceil_log2, parse_rational
from ..utils.config import get_config
from ..utils.errors import PreconditionError
from ..utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class InversionConstants:
    """Degree-dependent constants, all verified lower bounds."""

    d: int
    mu: Fraction
    nu: Fraction
    lambda_half: Fraction
    A: Fraction
    p: int
    xi: Tuple[GaussianRational, ...]
    xi_bits: int


def _constant_settings():
    config = get_config()
    relative = int(config.get_solver_setting('constants', 'relative_precision', 1000))
    divisor = int(config.get_solver_setting('constants', 'xi_error_divisor', 50))
    pi_lower = parse_rational(str(config.get_solver_setting('constants', 'pi_lower', '31415926/10000000')))
    pi_upper = parse_rational(str(config.get_solver_setting('constants', 'pi_upper', '31415927/10000000')))
    return relative, divisor, pi_lower, pi_upper


def _largest_satisfying(check: Callable[[Fraction], bool], lo: Fraction, hi: Fraction,
                        relative: int) -> Fraction:
    """Bisection for the largest x with check(x), stopping at (hi - lo) * relative <= lo."""
    if check(hi):
        return hi
    while not check(lo):
        lo /= 2
    while (hi - lo) * relative > lo:
        mid = (lo + hi) / 2
        if check(mid):
            lo = mid
        else:
            hi = mid
    return lo


def mu_lower(d: int, relative: int = 1000) -> Fraction:
    """Largest bisection point mu with (1 + mu)^(d-1) <= 2."""
    if d < 2:
        raise PreconditionError("mu is defined for degree >= 2")
    start = Fraction(1, 1 << (2 * (d - 1)).bit_length())
    return _largest_satisfying(lambda x: (1 + x) ** (d - 1) <= 2, start, Fraction(1), relative)


def nu_from_mu(d: int, mu: Fraction) -> Fraction:
    return (2 * (d - 1) * mu - 1) / d


def lambda_delta(d: int, nu: Fraction, delta: Fraction = Fraction(1, 2), relative: int = 1000) -> Fraction:
    """
    Largest bisection point lam with (1 + lam)^d <= 1 + delta*d*nu.

    Args:
        d: Degree
        nu: Image-disc factor (a valid lower bound)
        delta: Fraction of the image disc, 0 < delta <= 1
    """
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise PreconditionError("delta must lie in (0, 1]")
    bound = 1 + delta * d * nu
    start = Fraction(1, 1 << (8 * d).bit_length())
    return _largest_satisfying(lambda x: (1 + x) ** d <= bound, start, Fraction(1), relative)


def _taylor_cos_sin(theta: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    """cos and sin of theta, |theta| <= 4, each within 2^-(bits+2)."""
    tolerance = Fraction(1, 1 << (bits + 2))
    cos_sum, sin_sum = Fraction(0), Fraction(0)
    term = Fraction(1)
    n = 0
    while True:
        if n % 4 == 0:
            cos_sum += term
        elif n % 4 == 1:
            sin_sum += term
        elif n % 4 == 2:
            cos_sum -= term
        else:
            sin_sum -= term
        n += 1
        term = term * theta / n
        if n > 4 and abs(term) < tolerance:
            return cos_sum, sin_sum


def _spoke(q: int, p: int, bits: int, pi_lower: Fraction) -> GaussianRational:
    """Dyadic approximation of exp(2*pi*i*q/p) on the grid 2^-bits with norm <= 1."""
    signed = q if 2 * q <= p else q - p
    theta = 2 * pi_lower * signed / p
    scale = 1 << (bits + 8)
    theta = Fraction(round(theta * scale), scale)
    cos_v, sin_v = _taylor_cos_sin(theta, bits)
    unit = 1 << bits
    x = round(cos_v * unit)
    y = round(sin_v * unit)
    while x * x + y * y > unit * unit:
        if abs(x) >= abs(y):
            x -= 1 if x > 0 else -1
        else:
            y -= 1 if y > 0 else -1
    return GaussianRational(Fraction(x, unit), Fraction(y, unit))


@lru_cache(maxsize=None)
def make_constants(d: int) -> InversionConstants:
    """
    Build and verify the constants for degree d.

    Args:
        d: Polynomial degree, d >= 2

    Returns:
        InversionConstants whose defining inequalities hold exactly
    """
    if d < 2:
        raise PreconditionError("inversion constants need degree >= 2")
    relative, divisor, pi_lower, pi_upper = _constant_settings()

    mu = mu_lower(d, relative)
    nu = nu_from_mu(d, mu)
    lam = lambda_delta(d, nu, Fraction(1, 2), relative)
    A = 1 + lam / 5
    p = ceil(5 * pi_upper / lam)

    xi_bits = ceil_log2(16 * divisor / lam)
    xi = tuple(_spoke(q, p, xi_bits, pi_lower) for q in range(p))

    logger.debug(f"constants d={d}: mu~{float(mu):.5f} nu~{float(nu):.5f} "
                 f"lambda~{float(lam):.5f} p={p} xi_bits={xi_bits}")
    return InversionConstants(d=d, mu=mu, nu=nu, lambda_half=lam, A=A, p=p, xi=xi, xi_bits=xi_bits)
