"""
Root Refinement Module
Lagroot - Certified Polynomial Root Finding

Shrinks the radius of a CertifiedRoot. The preferred step recentres the
inverse series at the current value: with a lower bound R on the distance
to the critical points and delta < mu*R, the recentred series converges to
the same root, and its error falls like (delta/(nu*R))^(order+1). When the
recentring conditions fail the originating series is extended instead.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence

from ..arithmetic import abs_lower, ceil_log2, floor_log2, power_of_two, round_to_lattice
from ..inversion import SeriesContext, make_constants
from ..polynomials import Poly
from ..utils.config import get_config
from ..utils.errors import CriticalCenterError, InvariantViolation, PreconditionError
from ..utils.logging import get_logger
from .certify import CertifiedRoot, series_point


logger = get_logger(__name__)

CriticalSource = Callable[[Fraction], Sequence[CertifiedRoot]]


class RootRefiner:
    """Certified precision refinement for the roots of one square-free polynomial."""

    def __init__(self, f: Poly, critical_points: CriticalSource):
        """
        Args:
            f: Square-free polynomial
            critical_points: accuracy -> certified approximations of every root of f'
        """
        self.f = f
        self.degree = f.degree
        self.constants = make_constants(f.degree) if f.degree >= 2 else None
        config = get_config()
        self.series_order = int(config.get_solver_setting('refinement', 'series_order', 4))
        self.guard_bits = int(config.get_solver_setting('refinement', 'guard_bits', 8))
        self._critical_points = critical_points
        self._critical_cache: Dict[int, List[CertifiedRoot]] = {}
        logger.debug(f"RootRefiner initialized for degree {self.degree}")

    def critical(self, bits: int) -> List[CertifiedRoot]:
        """Critical points of f within 2^-bits, cached per precision."""
        if bits not in self._critical_cache:
            self._critical_cache[bits] = list(self._critical_points(power_of_two(-bits)))
        return self._critical_cache[bits]

    def refine(self, point: CertifiedRoot, target: Fraction) -> CertifiedRoot:
        """
        Return a CertifiedRoot for the same root with radius < target.

        Raises:
            PreconditionError: if target <= 0
        """
        target = Fraction(target)
        if target <= 0:
            raise PreconditionError("refinement target must be positive")
        steps = 0
        while point.radius >= target:
            better = self._recenter(point, target)
            if better is None or better.radius >= point.radius:
                better = self._extend(point)
            point = better
            steps += 1
        if steps:
            logger.debug(f"refined to radius 2^{ceil_log2(point.radius) if point.radius else '-inf'} "
                         f"in {steps} steps")
        return point

    def _critical_schedule(self, start: int, stop: int) -> Iterator[int]:
        bits = start
        yield bits
        while bits * 2 <= stop:
            bits *= 2
            yield bits

    def _distance_bound(self, a, bits: int) -> Fraction:
        """Lower bound on the distance from a to the critical points of f."""
        return min(abs_lower(a - c.value, 24) - c.radius for c in self.critical(bits))

    def _recenter(self, point: CertifiedRoot, target: Fraction) -> Optional[CertifiedRoot]:
        known = max(1, floor_log2(1 / point.radius)) if point.radius < 1 else 1
        wanted = ceil_log2(1 / target) + self.guard_bits
        scale = max(min(wanted, (self.series_order + 1) * known + self.guard_bits), known + 2)
        a = round_to_lattice(point.value, scale)
        delta = point.radius + power_of_two(-scale)

        mu = self.constants.mu
        R = None
        for bits in self._critical_schedule(max(point.level + 3, 4), known + 2):
            candidate = self._distance_bound(a, bits)
            if candidate > 0 and delta < mu * candidate:
                R = candidate
                break
        if R is None:
            return None
        try:
            ctx = SeriesContext.build(self.f, a)
        except CriticalCenterError:
            return None
        refined = series_point(ctx, R, self.series_order, self.constants, point.level)
        if refined is None or refined.ratio >= Fraction(1, 2):
            return None
        return refined

    def _extend(self, point: CertifiedRoot) -> CertifiedRoot:
        if point.ctx is None:
            raise InvariantViolation("cannot refine a point without a series context")
        extended = series_point(point.ctx, point.R, 2 * point.order, self.constants, point.level)
        if extended is None:
            raise InvariantViolation("series context no longer reaches its root")
        return extended
