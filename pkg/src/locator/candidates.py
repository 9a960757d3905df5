"""
Candidate Generation Module
Lagroot - Certified Polynomial Root Finding

candidate_list inverts f once per spiderweb sample and returns every value
(together with the critical approximations), so that each root has a
candidate within 2^-t. filtered_candidates additionally screens each sample
and keeps only values certified to lie within epsilon of a root.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from ..arithmetic import GaussianRational, format_gaussian, power_of_two, round_to_lattice
from ..inversion import SeriesContext, make_constants, partial_sum
from ..polynomials import Poly, separation_exponent
from ..utils.config import get_config
from ..utils.errors import ConstantPolynomialError, CriticalCenterError, NotSquareFreeError, PreconditionError
from ..utils.logging import get_logger
from .certify import certify_sample
from .isolation import approximate_all_roots, linear_root
from .spiderweb import SpiderwebGrid


logger = get_logger(__name__)


@dataclass(frozen=True)
class CandidateList:
    """Candidate root approximations at accuracy epsilon."""

    items: Tuple[GaussianRational, ...]
    epsilon: Fraction
    trace: Tuple[str, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def trace_line(grid: SpiderwebGrid, j: int, k: int, q: int, ox: int, oy: int, reason: str) -> str:
    cx, cy = grid.centers[j]
    a = format_gaussian(grid.to_gaussian(cx + ox, cy + oy))
    status = f"dropped({reason})" if reason else "kept"
    return f"j={j} k={k} q={q} a={a} {status}"


def critical_chain(f: Poly, t: int) -> List[CandidateList]:
    """
    Approximations of the roots of f', f'', ..., f^(d-1).

    Level r (index r-1) holds the distinct roots of the r-th derivative
    within 2^-t / 4^r. A constant or linear f has an empty chain.
    """
    chain: List[CandidateList] = []
    derivative = f
    for r in range(1, max(f.degree, 1)):
        derivative = derivative.derivative()
        accuracy = power_of_two(-(t + 2 * r))
        points = approximate_all_roots(derivative, accuracy)
        chain.append(CandidateList(tuple(p.value for p in points), accuracy))
    return chain


def _check_precision(t: int) -> None:
    if t < 1:
        raise PreconditionError("precision t must be at least 1")


def candidate_list(f: Poly, t: int) -> CandidateList:
    """
    Unfiltered candidates: every root of f has an item within 2^-t.

    The critical approximations are part of the output, and each sample
    contributes its N+1 term partial sum rounded to the sample lattice.
    """
    _check_precision(t)
    if f.is_constant():
        raise ConstantPolynomialError("candidate list needs a nonconstant polynomial")
    epsilon = power_of_two(-t)
    if f.degree == 1:
        return CandidateList((linear_root(f),), epsilon)

    chain = critical_chain(f, t + 1)
    centers = list(chain[0].items)
    grid = SpiderwebGrid(f, make_constants(f.degree), t, centers)
    items: List[GaussianRational] = [grid.center(j) for j in range(len(centers))]
    for j, k, q, ox, oy in grid.slots("jkq"):
        sample = grid.sample(j, k, q, ox, oy)
        try:
            ctx = SeriesContext.build(f, sample.a)
        except CriticalCenterError:
            continue
        value = partial_sum(ctx, 0, sample.N + 1)
        items.append(round_to_lattice(value, grid.scale_bits))
    logger.info(f"candidate list: {len(items)} items from {grid.size} samples at t={t}")
    return CandidateList(tuple(items), epsilon)


def filtered_precision(f: Poly, t: int) -> int:
    """Exponent of the largest power of two <= min(2^-t, eps0/3), eps0 = sep(f, f')."""
    if f.degree < 2:
        return t
    return max(t, separation_exponent(f, f.derivative()) + 2)


def _scan_centers(f: Poly, precision: int, centers: Sequence[GaussianRational], js: Sequence[int],
                  debug: bool) -> List[Tuple[int, Optional[GaussianRational], str]]:
    """Filtered scan of the listed centers; one (j, value, trace) per kept or traced slot."""
    grid = SpiderwebGrid(f, make_constants(f.degree), precision, centers)
    results: List[Tuple[int, Optional[GaussianRational], str]] = []
    for j in js:
        for k in range(grid.k_max):
            for q, (ox, oy) in enumerate(grid.ring_offsets(k)):
                point, reason = certify_sample(grid, j, k, q, ox, oy)
                line = trace_line(grid, j, k, q, ox, oy, reason) if debug else ""
                if point is not None or debug:
                    results.append((j, point.value if point is not None else None, line))
    return results


def filtered_candidates(f: Poly, t: int, debug: bool = False, n_jobs: Optional[int] = None) -> CandidateList:
    """
    Items within epsilon of a root, and every root within epsilon of an item,
    for epsilon = the largest power of two <= min(2^-t, eps0/3).

    Args:
        f: Square-free polynomial
        t: Requested precision
        debug: Collect one trace line per sample
        n_jobs: joblib workers for the per-center scans (config default)

    Raises:
        NotSquareFreeError: if gcd(f, f') != 1
    """
    _check_precision(t)
    if f.is_constant():
        raise ConstantPolynomialError("filtered candidates need a nonconstant polynomial")
    if f.degree == 1:
        return CandidateList((linear_root(f),), power_of_two(-t))
    if not f.is_square_free():
        raise NotSquareFreeError(f"{f} is not square-free")

    precision = filtered_precision(f, t)
    centers = [p.value for p in approximate_all_roots(f.derivative(), power_of_two(-(precision + 3)))]
    if n_jobs is None:
        n_jobs = int(get_config().parallel.get('n_jobs', 1))

    if n_jobs == 1 or len(centers) == 1:
        results = _scan_centers(f, precision, centers, range(len(centers)), debug)
    else:
        backend = get_config().parallel.get('backend', 'loky')
        chunks = Parallel(n_jobs=n_jobs, backend=backend)(
            delayed(_scan_centers)(f, precision, centers, [j], debug) for j in range(len(centers))
        )
        results = [entry for chunk in chunks for entry in chunk]

    items = tuple(value for _, value, _ in results if value is not None)
    trace = tuple(line for _, _, line in results if line)
    logger.info(f"filtered candidates: {len(items)} kept at precision {precision}")
    return CandidateList(items, power_of_two(-precision), trace)
