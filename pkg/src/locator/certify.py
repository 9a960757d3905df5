"""
Certified Points Module
Lagroot - Certified Polynomial Root Finding

A CertifiedRoot is a Gaussian rational together with a radius such that a
root of f lies in the closed disc around it. Points produced from a series
keep their context so they can be extended with more terms later.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Optional, Tuple

from ..arithmetic import GaussianRational, ceil_log2, power_of_two, round_to_lattice
from ..inversion import (InversionConstants, SeriesContext, make_constants, partial_sum,
                         ratio_upper_bound, series_remainder_bound)
from ..utils.errors import CriticalCenterError, InvariantViolation

if TYPE_CHECKING:
    from .spiderweb import SpiderwebGrid


@dataclass(frozen=True)
class CertifiedRoot:
    """A root of f lies within radius of value."""

    value: GaussianRational
    radius: Fraction
    ctx: Optional[SeriesContext] = None
    R: Optional[Fraction] = None
    ratio: Optional[Fraction] = None
    order: int = 0
    level: int = 0

    @property
    def exact(self) -> bool:
        return self.radius == 0

    def overlaps(self, other: "CertifiedRoot") -> bool:
        """True when the two closed discs intersect."""
        reach = self.radius + other.radius
        return (self.value - other.value).norm_sq() <= reach * reach

    def excludes(self, other: "CertifiedRoot") -> bool:
        return not self.overlaps(other)


def series_point(ctx: SeriesContext, R: Fraction, N: int,
                 constants: Optional[InversionConstants] = None, level: int = 0) -> Optional[CertifiedRoot]:
    """
    Evaluate g(0) = a + sum_{n<=N} c_n (-b)^n with a certified radius.

    The partial sum is rounded to a dyadic lattice whose spacing is at most
    a sixteenth of the series remainder, and the rounding error is added to
    the radius.

    Args:
        ctx: Series context at center a
        R: Lower bound on the distance from a to the critical points of f
        N: Number of series terms
        constants: Constants for deg f
        level: Working precision the point was found at

    Returns:
        CertifiedRoot, or None if 0 is not inside the certified disc
    """
    constants = constants or make_constants(ctx.degree)
    if ctx.b.is_zero():
        return CertifiedRoot(ctx.a, Fraction(0), ctx, Fraction(R), Fraction(0), N, level)
    ratio = ratio_upper_bound(ctx, 0, R, constants)
    if ratio >= 1:
        return None
    remainder = series_remainder_bound(constants, R, ratio, N)
    value = partial_sum(ctx, 0, N)
    bits = ceil_log2(16 / remainder)
    rounded = round_to_lattice(value, bits)
    radius = remainder + power_of_two(-bits)
    return CertifiedRoot(rounded, radius, ctx, Fraction(R), ratio, N, level)


def certify_below(ctx: SeriesContext, R: Fraction, N: int, bound: Fraction,
                  constants: Optional[InversionConstants] = None, level: int = 0) -> CertifiedRoot:
    """
    series_point with at least N terms, adding terms until radius < bound.

    Raises:
        InvariantViolation: if the series does not converge at 0
    """
    point = series_point(ctx, R, N, constants, level)
    if point is None:
        raise InvariantViolation(f"series at {ctx.a} does not reach the root")
    while point.radius >= bound:
        point = series_point(ctx, R, point.order + max(1, point.order // 2), constants, level)
    return point


def certify_sample(grid: "SpiderwebGrid", j: int, k: int, q: int, ox: int, oy: int
                   ) -> Tuple[Optional[CertifiedRoot], str]:
    """
    Run the sample filter on slot (j, k, q) and, if it passes, evaluate the
    inverse series at that sample. N comes from the upper bound on R; the
    convergence ratio and remainder use the lower bound.

    Returns:
        (CertifiedRoot, "") for a kept sample, (None, reason) otherwise
    """
    cx, cy = grid.centers[j]
    reason = grid.screen(j, cx + ox, cy + oy, ox, oy)
    if reason:
        return None, reason
    sample = grid.sample(j, k, q, ox, oy)
    try:
        ctx = SeriesContext.build(grid.f, sample.a)
    except CriticalCenterError:
        return None, "critical"
    point = certify_below(ctx, sample.R_lower, sample.N, grid.epsilon, grid.constants, grid.precision)
    return point, ""
