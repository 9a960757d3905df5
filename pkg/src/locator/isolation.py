"""
Root Isolation Module
Lagroot - Certified Polynomial Root Finding

isolate_roots scans the filtered spiderweb ring by ring at working
precision 4, 8, 16, ... bits, merging certified points whose discs overlap,
and stops once deg f pairwise disjoint discs are known. At the separation
precision every root is guaranteed to be found, so the schedule is finite.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ..arithmetic import power_of_two
from ..inversion import make_constants
from ..polynomials import Poly, separation_exponent, square_free_decompose
from ..utils.config import get_config
from ..utils.errors import ConstantPolynomialError, InvariantViolation, NotSquareFreeError
from ..utils.logging import get_logger
from .certify import CertifiedRoot, certify_sample
from .refinement import RootRefiner
from .spiderweb import SpiderwebGrid


logger = get_logger(__name__)


def linear_root(f: Poly):
    """The root -f_0/f_1 of a degree-1 polynomial."""
    return -f[0] / f[1]


def merge_point(found: List[CertifiedRoot], point: CertifiedRoot) -> None:
    """Add point unless its disc meets a known one; a single tighter match replaces it."""
    overlapping = [idx for idx, known in enumerate(found) if known.overlaps(point)]
    if not overlapping:
        found.append(point)
    elif len(overlapping) == 1 and point.radius < found[overlapping[0]].radius:
        found[overlapping[0]] = point


def final_precision(f: Poly) -> int:
    """Working precision at which every root of f is guaranteed a certified sample."""
    return max(separation_exponent(f, f.derivative()), separation_exponent(f, f)) + 2


def _scan_level(f: Poly, level: int) -> List[CertifiedRoot]:
    centers = [p.value for p in approximate_all_roots(f.derivative(), power_of_two(-(level + 3)))]
    grid = SpiderwebGrid(f, make_constants(f.degree), level, centers)
    found: List[CertifiedRoot] = []
    for j, k, q, ox, oy in grid.slots("kjq"):
        point, _ = certify_sample(grid, j, k, q, ox, oy)
        if point is None:
            continue
        merge_point(found, point)
        if len(found) == f.degree:
            break
    logger.debug(f"level {level}: {len(found)} of {f.degree} roots isolated")
    return found


@lru_cache(maxsize=256)
def isolate_roots(f: Poly) -> Tuple[CertifiedRoot, ...]:
    """
    Certified, pairwise disjoint discs around each root of a square-free f.

    Raises:
        ConstantPolynomialError: if f is constant
        NotSquareFreeError: if gcd(f, f') != 1
    """
    if f.is_constant():
        raise ConstantPolynomialError("cannot isolate the roots of a constant")
    if f.degree == 1:
        return (CertifiedRoot(linear_root(f), Fraction(0)),)
    if not f.is_square_free():
        raise NotSquareFreeError(f"{f} has a repeated root")

    final = final_precision(f)
    level = min(int(get_config().get_solver_setting('isolation', 'initial_precision', 4)), final)
    while True:
        found = _scan_level(f, level)
        if len(found) == f.degree:
            return tuple(found)
        if level >= final:
            raise InvariantViolation(f"isolated {len(found)} of {f.degree} roots at full precision")
        level = min(2 * level, final)


@lru_cache(maxsize=256)
def refiner_for(f: Poly) -> RootRefiner:
    """Shared RootRefiner for a square-free f, drawing critical points from f'."""
    slope = f.derivative()
    return RootRefiner(f, lambda accuracy: approximate_all_roots(slope, accuracy))


def approximate_all_roots(g: Poly, accuracy: Fraction) -> List[CertifiedRoot]:
    """
    One certified approximation with radius < accuracy per distinct root of g.

    Constant g has no roots and yields an empty list.
    """
    if g.is_constant():
        return []
    points: List[CertifiedRoot] = []
    for factor, _ in square_free_decompose(g).factors:
        refiner = refiner_for(factor)
        points.extend(refiner.refine(point, accuracy) for point in isolate_roots(factor))
    return points
