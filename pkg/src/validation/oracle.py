"""
Reference Oracle Module
Lagroot - Certified Polynomial Root Finding

Independent root finder used to cross-check the certified pipeline: per
square-free factor, Durand-Kerner iteration in mpmath at 4t + 64 bits, then
an exact a-posteriori certificate. A value that is an exact root gets radius
0; any other value gets the inclusion radius m*|phi(z)|/|phi'(z)|. The
factor is accepted when every radius is at most tol/2 and the m discs are
pairwise disjoint, so each disc holds exactly one root.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath as mp

from ..arithmetic import GaussianRational, power_of_two, round_to_lattice, sqrt_upper
from ..polynomials import Poly, cauchy_bounds, square_free_decompose
from ..utils.config import get_config
from ..utils.errors import ConstantPolynomialError, OracleConvergenceError
from ..utils.logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class OracleRoot:
    """The true root lies within certified_radius of value."""

    value: GaussianRational
    certified_radius: Fraction


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf."""
    sign, man, exp, _ = x._mpf_
    value = Fraction(int(man)) * power_of_two(exp)
    return -value if sign else value


def _to_mpc(c: GaussianRational):
    return mp.mpc(mp.mpf(c.re.numerator) / c.re.denominator, mp.mpf(c.im.numerator) / c.im.denominator)


class ReferenceOracle:
    """Durand-Kerner reference roots with exact certificates."""

    def __init__(self):
        settings = get_config().oracle
        self.precision_factor = int(settings.get('precision_factor', 4))
        self.precision_offset = int(settings.get('precision_offset', 64))
        self.iteration_factor = int(settings.get('iteration_factor', 64))
        self.max_escalations = int(settings.get('max_escalations', 3))
        logger.debug("ReferenceOracle initialized")

    def reference_roots(self, f: Poly, t: int) -> List[Tuple[OracleRoot, int]]:
        """
        All roots of f with multiplicities, each within 2^-t / 2 of a true root.

        Raises:
            ConstantPolynomialError: if f is constant
            OracleConvergenceError: if a factor cannot be certified after escalation
        """
        if f.is_constant():
            raise ConstantPolynomialError("oracle needs a nonconstant polynomial")
        t = max(t, 1)
        results: List[Tuple[OracleRoot, int]] = []
        for factor, multiplicity in square_free_decompose(f).factors:
            results.extend((root, multiplicity) for root in self.factor_roots(factor, t))
        results.sort(key=lambda item: (item[0].value.re, item[0].value.im))
        return results

    def factor_roots(self, phi: Poly, t: int) -> List[OracleRoot]:
        """Certified roots of a monic square-free factor."""
        if phi.degree == 1:
            return [OracleRoot(-phi[0] / phi[1], Fraction(0))]
        tolerance = power_of_two(-t)
        precision = self.precision_factor * t + self.precision_offset
        budget = self.iteration_factor * phi.degree * t
        for attempt in range(self.max_escalations + 1):
            approximations = self._iterate(phi, precision, budget)
            certified = self._certify(phi, approximations, tolerance, 2 * t + 32)
            if certified is not None:
                return certified
            logger.debug(f"oracle attempt {attempt} failed at {precision} bits; escalating")
            precision *= 2
            budget *= 2
        raise OracleConvergenceError(f"no certified roots for {phi} at t={t}")

    def _iterate(self, phi: Poly, precision: int, budget: int) -> List[GaussianRational]:
        m = phi.degree
        _, hi = cauchy_bounds(phi)
        with mp.workprec(precision):
            coeffs = [_to_mpc(c) for c in phi.coeffs]
            lead = coeffs[-1]
            radius = mp.mpf(hi.numerator) / hi.denominator
            offset = mp.sqrt(2) / 3
            z = [radius * mp.expj(2 * mp.pi * k / m + offset) for k in range(m)]
            threshold = mp.ldexp(mp.mpf(1), 8 - precision)
            for _ in range(budget):
                largest = mp.mpf(0)
                for k in range(m):
                    value = mp.polyval(coeffs[::-1], z[k])
                    denominator = lead
                    for j in range(m):
                        if j != k:
                            denominator *= z[k] - z[j]
                    if denominator == 0:
                        z[k] += threshold
                        continue
                    step = value / denominator
                    z[k] -= step
                    largest = max(largest, abs(step))
                if largest < threshold:
                    break
            return [GaussianRational(mpf_to_fraction(w.real), mpf_to_fraction(w.imag)) for w in z]

    def _certify(self, phi: Poly, values: Sequence[GaussianRational], tolerance: Fraction,
                 bits: int) -> Optional[List[OracleRoot]]:
        m = phi.degree
        slope = phi.derivative()
        roots: List[OracleRoot] = []
        for value in values:
            z = round_to_lattice(value, bits)
            residual = phi(z)
            if residual.is_zero():
                roots.append(OracleRoot(z, Fraction(0)))
                continue
            derivative = slope(z)
            if derivative.is_zero():
                return None
            radius = sqrt_upper(m * m * residual.norm_sq() / derivative.norm_sq(), 24)
            if radius > tolerance / 2:
                return None
            roots.append(OracleRoot(z, radius))
        for i, first in enumerate(roots):
            for second in roots[i + 1:]:
                reach = first.certified_radius + second.certified_radius
                if (first.value - second.value).norm_sq() <= reach * reach:
                    return None
        return roots


def reference_roots(f: Poly, t: int) -> List[Tuple[OracleRoot, int]]:
    return ReferenceOracle().reference_roots(f, t)
