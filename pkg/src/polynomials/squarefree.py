"""
Square-Free Decomposition Module
Lagroot - Certified Polynomial Root Finding

Splits a polynomial into pairwise coprime square-free monic factors with
multiplicities by rewriting a factor list until no rule applies:

  (a) a factor g with gcd(g, g') nonconstant is replaced by gcd(g, g') and g / gcd(g, g');
  (b) when f_h properly divides f_j, f_j is replaced by f_h and f_j / f_h;
  (c) when f_h and f_j share a proper common factor g, both are split by g.

At the fixed point any two factors are equal or coprime; equal factors are
then counted. Rules are tried in the order (a), (b), (c), lowest indices first.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..arithmetic import ONE, GaussianRational
from ..utils.errors import ConstantPolynomialError
from ..utils.logging import get_logger
from .poly import Poly, poly_gcd


logger = get_logger(__name__)


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """f = unit * prod(factor ** multiplicity), factors monic."""

    unit: GaussianRational
    factors: Tuple[Tuple[Poly, int], ...]

    @property
    def degree(self) -> int:
        return sum(p.degree * e for p, e in self.factors)

    def reconstruct(self) -> Poly:
        result = Poly.constant(self.unit)
        for factor, multiplicity in self.factors:
            result = result * factor ** multiplicity
        return result

    def square_free_part(self) -> Poly:
        """Product of the distinct factors, i.e. the monic radical of f."""
        result = Poly.constant(ONE)
        for factor, _ in self.factors:
            result = result * factor
        return result


def _split_non_square_free(factors: List[Poly]) -> Optional[List[Poly]]:
    for idx, g in enumerate(factors):
        common = poly_gcd(g, g.derivative())
        if common.degree >= 1:
            return factors[:idx] + [common, g // common] + factors[idx + 1:]
    return None


def _split_divisible(factors: List[Poly]) -> Optional[List[Poly]]:
    for h, fh in enumerate(factors):
        for j, fj in enumerate(factors):
            if h == j or fh == fj or fh.degree >= fj.degree:
                continue
            quotient, remainder = fj.divrem(fh)
            if remainder.is_zero():
                return factors[:j] + [fh, quotient.monic()] + factors[j + 1:]
    return None


def _split_common(factors: List[Poly]) -> Optional[List[Poly]]:
    for h in range(len(factors)):
        for j in range(h + 1, len(factors)):
            fh, fj = factors[h], factors[j]
            if fh == fj:
                continue
            common = poly_gcd(fh, fj)
            if common.degree >= 1 and common != fh and common != fj:
                rest = [f for idx, f in enumerate(factors) if idx not in (h, j)]
                return rest[:h] + [common, common, fh // common, fj // common] + rest[h:]
    return None


def square_free_decompose(f: Poly) -> SquareFreeDecomposition:
    """
    Decompose f into pairwise coprime square-free monic factors.

    Args:
        f: Nonconstant polynomial

    Returns:
        SquareFreeDecomposition with unit = leading coefficient of f

    Raises:
        ConstantPolynomialError: if f is constant or zero
    """
    if f.is_constant():
        raise ConstantPolynomialError("square-free decomposition needs a nonconstant polynomial")

    unit = f.leading_coefficient
    factors = [f.monic()]
    rounds = 0
    while True:
        for rule in (_split_non_square_free, _split_divisible, _split_common):
            rewritten = rule(factors)
            if rewritten is not None:
                logger.debug(f"rule {rule.__name__} fired on {len(factors)} factors")
                factors = rewritten
                rounds += 1
                break
        else:
            break

    grouped: List[List] = []
    for factor in factors:
        for entry in grouped:
            if entry[0] == factor:
                entry[1] += 1
                break
        else:
            grouped.append([factor, 1])

    decomposition = SquareFreeDecomposition(
        unit=unit,
        factors=tuple((p, e) for p, e in grouped),
    )
    logger.debug(f"decomposed degree {f.degree} into {len(grouped)} factors after {rounds} rewrites")
    return decomposition
