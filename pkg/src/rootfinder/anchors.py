"""
Stable Anchors Module
Lagroot - Certified Polynomial Root Finding

Precision-independent root identities. Each root of a square-free f gets
one anchor within eta/5, eta = sep(f, f); anchors are ordered by (re, im)
and their index is the root id at every precision.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ..arithmetic import GaussianRational, power_of_two
from ..locator import CertifiedRoot, isolate_roots, refiner_for
from ..polynomials import Poly, separation_bound
from ..utils.errors import ConstantPolynomialError, InvariantViolation, NotSquareFreeError, RootSelectionError
from ..utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class StableRootTable:
    """One anchor per distinct root, pairwise farther apart than 3*eta/5."""

    f: Poly
    anchors: Tuple[GaussianRational, ...]
    eta: Fraction
    points: Tuple[CertifiedRoot, ...]

    def __len__(self) -> int:
        return len(self.anchors)

    def point(self, root_id: int) -> CertifiedRoot:
        if not 0 <= root_id < len(self.points):
            raise RootSelectionError(f"root id {root_id} out of range 0..{len(self.points) - 1}")
        return self.points[root_id]


def _far_from_all(point: CertifiedRoot, kept: List[CertifiedRoot], eta: Fraction) -> bool:
    """Gap test: distinct roots' anchors sit beyond 3*eta/5, duplicates within 2*eta/5."""
    half = eta / 2
    return all((point.value - other.value).norm_sq() >= half * half for other in kept)


@lru_cache(maxsize=256)
def stable_anchors(f: Poly) -> StableRootTable:
    """
    Anchor table for a square-free f.

    Raises:
        ConstantPolynomialError: if f is constant
        NotSquareFreeError: if gcd(f, f') != 1
    """
    if f.is_constant():
        raise ConstantPolynomialError("anchors need a nonconstant polynomial")
    if not f.is_square_free():
        raise NotSquareFreeError(f"{f} has a repeated root")

    eta = separation_bound(f, f)
    refiner = refiner_for(f)
    kept: List[CertifiedRoot] = []
    for point in isolate_roots(f):
        refined = refiner.refine(point, eta / 5)
        if _far_from_all(refined, kept, eta):
            kept.append(refined)
    if len(kept) != f.degree:
        raise InvariantViolation(f"expected {f.degree} anchors, found {len(kept)}")

    kept.sort(key=lambda p: (p.value.re, p.value.im))
    logger.debug(f"{len(kept)} anchors for degree {f.degree}, eta = 2^-{eta.denominator.bit_length() - 1}")
    return StableRootTable(f=f, anchors=tuple(p.value for p in kept), eta=eta, points=tuple(kept))


def approximate_roots(f: Poly, t: int) -> List[Tuple[GaussianRational, int]]:
    """
    (z, root_id) for every root of a square-free f, |z - root| < 2^-t.

    Anchors are returned unchanged when 2^-t >= eta/5. Otherwise each anchor
    is refined and the refined list is matched back to the anchors: root j
    takes the first refined value within eta/2 of anchor j.
    """
    table = stable_anchors(f)
    epsilon = power_of_two(-t)
    if epsilon >= table.eta / 5:
        return [(anchor, root_id) for root_id, anchor in enumerate(table.anchors)]

    refiner = refiner_for(f)
    refined = [refiner.refine(point, epsilon).value for point in table.points]
    half_sq = (table.eta / 2) ** 2
    result = []
    for root_id, anchor in enumerate(table.anchors):
        match = next((z for z in refined if (z - anchor).norm_sq() < half_sq), None)
        if match is None:
            raise InvariantViolation(f"no refined value near anchor {root_id}")
        result.append((match, root_id))
    return result
