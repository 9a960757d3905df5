"""
Root Finder Module
Lagroot - Certified Polynomial Root Finding

Full pipeline for an arbitrary nonconstant polynomial: square-free
decomposition, stable anchors per factor, one global root id per distinct
root (anchors ordered by (re, im)), exact t-digit expansions and single
binary digits of real algebraic roots.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from joblib import Parallel, delayed

from ..arithmetic import GaussianRational
from ..polynomials import Poly, SquareFreeDecomposition, square_free_decompose
from ..utils.config import get_config
from ..utils.errors import ConstantPolynomialError, NonRealRootError, PreconditionError, RootSelectionError
from ..utils.logging import get_logger
from .anchors import stable_anchors
from .expansion import digit_expansion, is_real_root
from .report import RootEntry, RootReport


logger = get_logger(__name__)


@dataclass(frozen=True)
class RootHandle:
    """Where a globally numbered root lives: square-free factor and local anchor index."""

    root_id: int
    factor_index: int
    local_id: int
    multiplicity: int
    anchor: GaussianRational


class RootFinder:
    """Root identities and exact expansions for one polynomial."""

    def __init__(self, f: Poly, n_jobs: Optional[int] = None):
        """
        Args:
            f: Nonconstant polynomial
            n_jobs: joblib workers for per-root expansion (config default)

        Raises:
            ConstantPolynomialError: if f is constant
        """
        if f.is_constant():
            raise ConstantPolynomialError("root finding needs a nonconstant polynomial")
        self.f = f
        parallel = get_config().parallel
        self.n_jobs = int(n_jobs if n_jobs is not None else parallel.get('n_jobs', 1))
        self.backend = parallel.get('backend', 'loky')
        self.decomposition: SquareFreeDecomposition = square_free_decompose(f)

        located = []
        for factor_index, (factor, multiplicity) in enumerate(self.decomposition.factors):
            for local_id, anchor in enumerate(stable_anchors(factor).anchors):
                located.append((anchor, factor_index, local_id, multiplicity))
        located.sort(key=lambda item: (item[0].re, item[0].im))
        self.roots: Tuple[RootHandle, ...] = tuple(
            RootHandle(root_id, factor_index, local_id, multiplicity, anchor)
            for root_id, (anchor, factor_index, local_id, multiplicity) in enumerate(located)
        )
        logger.info(f"RootFinder initialized: degree {f.degree}, "
                    f"{len(self.decomposition.factors)} factors, {len(self.roots)} distinct roots")

    def handle(self, root_id: int) -> RootHandle:
        if not 0 <= root_id < len(self.roots):
            raise RootSelectionError(f"root id {root_id} out of range 0..{len(self.roots) - 1}")
        return self.roots[root_id]

    def factor_of(self, handle: RootHandle) -> Poly:
        return self.decomposition.factors[handle.factor_index][0]

    def expansion(self, root_id: int, t: int) -> Tuple[int, int]:
        handle = self.handle(root_id)
        return digit_expansion(self.factor_of(handle), handle.local_id, t)

    def report(self, t: int) -> RootReport:
        """RootReport at precision t, expansions computed per root with joblib."""
        if t < 0:
            raise PreconditionError("precision t must be non-negative")
        logger.info(f"expanding {len(self.roots)} roots at t={t}")
        floors = Parallel(n_jobs=self.n_jobs, backend=self.backend)(
            delayed(digit_expansion)(self.factor_of(handle), handle.local_id, t) for handle in self.roots
        )
        entries = tuple(
            RootEntry(handle.root_id, re_floor, im_floor, handle.multiplicity)
            for handle, (re_floor, im_floor) in zip(self.roots, floors)
        )
        return RootReport(unit=self.decomposition.unit, t=t, roots=entries)

    def is_real(self, root_id: int) -> bool:
        handle = self.handle(root_id)
        return is_real_root(self.factor_of(handle), handle.local_id)

    def real_floors(self, root_id: int, k: int) -> int:
        """floor(alpha * 2^k) for a real root alpha."""
        if not self.is_real(root_id):
            raise NonRealRootError(f"root {root_id} is not real")
        return self.expansion(root_id, k)[0]

    def bit(self, root_id: int, k: int) -> int:
        """Fractional binary digit k >= 1 of a real root."""
        return self.bits(root_id, k, k)[0]

    def bits(self, root_id: int, k_from: int, k_to: int) -> List[int]:
        """
        Fractional binary digits k_from..k_to of a real root from a single
        expansion at k_to, using floor(x 2^(k-1)) = floor(floor(x 2^k) / 2).
        """
        if k_from < 1 or k_to < k_from:
            raise PreconditionError("digit positions must satisfy 1 <= k_from <= k_to")
        top = self.real_floors(root_id, k_to)
        return [(top >> (k_to - k)) & 1 for k in range(k_from, k_to + 1)]


def find_roots(f: Poly, t: int, n_jobs: Optional[int] = None) -> RootReport:
    """
    Unit, distinct roots with multiplicities and their exact t-digit floors.

    Raises:
        ConstantPolynomialError: if f is constant
    """
    return RootFinder(f, n_jobs).report(t)


def algebraic_bit(f: Poly, root_id: int, k: int) -> int:
    """
    Binary digit k of the real root selected by root_id, computed as
    floor(alpha 2^k) - 2 floor(alpha 2^(k-1)).

    Raises:
        NonRealRootError: if the selected root is not real
        RootSelectionError: if root_id is out of range
    """
    if k < 1:
        raise PreconditionError("digit position k must be at least 1")
    finder = RootFinder(f)
    if not finder.is_real(root_id):
        raise NonRealRootError(f"root {root_id} is not real")
    return finder.expansion(root_id, k)[0] - 2 * finder.expansion(root_id, k - 1)[0]


def digit_range(f: Poly, root_id: int, k_from: int, k_to: int) -> List[int]:
    """Binary digits k_from..k_to of the real root selected by root_id."""
    return RootFinder(f).bits(root_id, k_from, k_to)
