"""
Spiderweb Grid Module
Lagroot - Certified Polynomial Root Finding

Sample points a = alpha_j + eps*A^k*xi_q arranged in rings (k) and spokes (q)
around each approximate critical point alpha_j, for k < k_max where
eps*A^k_max >= 2c and c = 2 + max_j |f_j/f_d| bounds every root modulus.

All samples live on the lattice 2^-E Z[i] with E = t + guard, so f(a) and
f'(a) are evaluated in exact integer arithmetic and the sample filter is a
comparison of integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, List, Sequence, Tuple

from ..arithmetic import GaussianRational, ceil_log2
from ..inversion import InversionConstants
from ..polynomials import Poly, max_coefficient_ratio
from ..utils.config import get_config
from ..utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class SpiderwebSample:
    """One slot of the web with its exact geometry."""

    j: int
    k: int
    q: int
    a: GaussianRational
    R_squared: Fraction
    R_lower: Fraction
    R_upper: Fraction
    N: int


def ceil_isqrt(n: int) -> int:
    """Smallest r with r*r >= n."""
    r = isqrt(n)
    return r if r * r == n else r + 1


class LatticeEvaluator:
    """Evaluates f and f' at (x + iy)/2^E with integer arithmetic only."""

    def __init__(self, f: Poly, scale_bits: int):
        """
        Args:
            f: Polynomial of degree d >= 1
            scale_bits: Lattice exponent E
        """
        self.degree = d = f.degree
        self.scale_bits = E = scale_bits
        self.denominator, ints = f.integer_form()
        # value:      sum F_j z^j 2^(E(d-j))            = D 2^(Ed) f(a)
        # derivative: sum (j+1) F_(j+1) z^j 2^(E(d-1-j)) = D 2^(E(d-1)) f'(a)
        self.value_terms = [(re << (E * (d - j)), im << (E * (d - j))) for j, (re, im) in enumerate(ints)]
        self.slope_terms = [
            ((j + 1) * ints[j + 1][0] << (E * (d - 1 - j)), (j + 1) * ints[j + 1][1] << (E * (d - 1 - j)))
            for j in range(d)
        ]

    @staticmethod
    def _horner(terms: Sequence[Tuple[int, int]], x: int, y: int) -> Tuple[int, int]:
        re, im = terms[-1]
        for k in range(len(terms) - 2, -1, -1):
            sr, si = terms[k]
            re, im = re * x - im * y + sr, re * y + im * x + si
        return re, im

    def value(self, x: int, y: int) -> Tuple[int, int]:
        return self._horner(self.value_terms, x, y)

    def slope(self, x: int, y: int) -> Tuple[int, int]:
        return self._horner(self.slope_terms, x, y)


class SpiderwebGrid:
    """Rings and spokes around lattice-rounded critical approximations."""

    def __init__(self, f: Poly, constants: InversionConstants, precision: int,
                 centers: Sequence[GaussianRational]):
        """
        Args:
            f: Polynomial whose roots are sought (degree >= 2)
            constants: make_constants(deg f)
            precision: t with eps = 2^-t
            centers: Critical-point approximations (within eps/8)
        """
        self.f = f
        self.constants = constants
        self.precision = precision
        self.epsilon = Fraction(1, 1 << precision)

        guard_factor = get_config().get_solver_setting('spiderweb', 'lattice_guard_factor', 128)
        self.guard_bits = max(ceil_log2(Fraction(guard_factor) / constants.lambda_half), 4)
        self.scale_bits = precision + self.guard_bits
        self.xi_bits = constants.xi_bits

        self.c = 2 + max_coefficient_ratio(f)
        self.ring_radii = self._ring_radii()
        self.spokes = [(int(xi.re * (1 << self.xi_bits)), int(xi.im * (1 << self.xi_bits)))
                       for xi in constants.xi]
        unit = 1 << self.scale_bits
        self.centers = [(round(c.re * unit), round(c.im * unit)) for c in centers]
        self.evaluator = LatticeEvaluator(f, self.scale_bits)
        # eps/4 in lattice units
        self.quarter_epsilon = 1 << (self.guard_bits - 2)

        logger.debug(f"spiderweb t={precision} E={self.scale_bits} rings={self.k_max} "
                     f"spokes={constants.p} centers={len(self.centers)}")

    @property
    def k_max(self) -> int:
        return len(self.ring_radii)

    @property
    def size(self) -> int:
        return len(self.centers) * self.k_max * self.constants.p

    def _ring_radii(self) -> List[int]:
        """eps*A^k scaled by 2^(E + xi_bits), for every k < k_max."""
        A = self.constants.A
        shift = self.guard_bits + self.xi_bits
        limit_num, limit_den = 2 * self.c.numerator << self.precision, self.c.denominator
        num, den = 1, 1
        radii = []
        while num * limit_den < limit_num * den:
            radii.append(((num << shift) + den // 2) // den)
            num *= A.numerator
            den *= A.denominator
        return radii

    def ring_offsets(self, k: int) -> List[Tuple[int, int]]:
        """Lattice offsets eps*A^k*xi_q for every spoke q of ring k."""
        radius = self.ring_radii[k]
        shift = 2 * self.xi_bits
        half = 1 << (shift - 1)
        return [((radius * sx + half) >> shift, (radius * sy + half) >> shift) for sx, sy in self.spokes]

    def slots(self, order: str = "jkq") -> Iterator[Tuple[int, int, int, int, int]]:
        """
        Yield (j, k, q, ox, oy) in a fixed order: 'jkq' (center major) or
        'kjq' (ring major, nearest rings of every center first).
        """
        if order == "jkq":
            for j in range(len(self.centers)):
                for k in range(self.k_max):
                    for q, (ox, oy) in enumerate(self.ring_offsets(k)):
                        yield j, k, q, ox, oy
        elif order == "kjq":
            for k in range(self.k_max):
                offsets = self.ring_offsets(k)
                for j in range(len(self.centers)):
                    for q, (ox, oy) in enumerate(offsets):
                        yield j, k, q, ox, oy
        else:
            raise ValueError(f"unknown slot order {order!r}")

    def to_gaussian(self, x: int, y: int) -> GaussianRational:
        unit = 1 << self.scale_bits
        return GaussianRational(Fraction(x, unit), Fraction(y, unit))

    def center(self, j: int) -> GaussianRational:
        return self.to_gaussian(*self.centers[j])

    def sample(self, j: int, k: int, q: int, ox: int, oy: int) -> SpiderwebSample:
        """
        Materialize slot (j, k, q) with its exact R^2, rational bounds
        R_lower <= R <= R_upper and order N. N is chosen from R_upper;
        certification uses R_lower.
        """
        cx, cy = self.centers[j]
        offset_sq = ox * ox + oy * oy
        unit = 1 << self.scale_bits
        R_upper = Fraction(ceil_isqrt(offset_sq), 2 * unit)
        return SpiderwebSample(
            j=j, k=k, q=q,
            a=self.to_gaussian(cx + ox, cy + oy),
            R_squared=Fraction(offset_sq, 4 * unit * unit),
            R_lower=Fraction(isqrt(offset_sq), 2 * unit),
            R_upper=R_upper,
            N=self.series_order(R_upper),
        )

    def series_order(self, R_upper: Fraction) -> int:
        """N = ceil(log2(mu*R/eps)), at least 1."""
        return max(1, ceil_log2(self.constants.mu * R_upper / self.epsilon))

    def screen(self, j: int, x: int, y: int, ox: int, oy: int) -> str:
        """
        Apply the sample filter to lattice point (x, y) of center j.

        Returns:
            "" if both checks pass, otherwise "residual" (|b| too large for the
            series disc) or "critical" (another critical point too close)
        """
        nu = self.constants.nu
        br, bi = self.evaluator.value(x, y)
        pr, pi = self.evaluator.slope(x, y)
        offset_sq = ox * ox + oy * oy
        # 4|b|^2 < nu^2 |f'(a)|^2 R^2, multiplied through by the lattice scales
        lhs = 16 * nu.denominator ** 2 * (br * br + bi * bi)
        rhs = nu.numerator ** 2 * (pr * pr + pi * pi) * offset_sq
        if lhs >= rhs:
            return "residual"
        need = ceil_isqrt(offset_sq) + 2 * self.quarter_epsilon
        for cx, cy in self.centers:
            dx, dy = x - cx, y - cy
            if 2 * isqrt(dx * dx + dy * dy) < need:
                return "critical"
        return ""
