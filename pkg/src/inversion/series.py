"""
Inverse Series Module
Lagroot - Certified Polynomial Root Finding

Power series of the local inverse g of a polynomial f around b = f(a):

    g(w) = a + sum_{n>=1} c_n (w - b)^n,

with c_n given explicitly by the shifted coefficients f~_h = [(z-a)^h] f:

    c_n = 1/(n! f~_1) * sum over (m_2..m_d) with sum (h-1) m_h = n-1 of
          (sum h m_h)! * prod (1/m_h!) (-f~_h / f~_1^h)^(m_h)

Partial sums are taken as a single sum over index tuples, and the tail
after N terms is bounded from the convergence radius nu*R*|f'(a)| of the
series (R any lower bound on the distance from a to the critical points).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple

from ..arithmetic import ONE, ZERO, GaussianRational, sqrt_lower, sqrt_upper
from ..arithmetic.gaussian import GaussLike
from ..polynomials import Poly
from ..utils.errors import CriticalCenterError, PreconditionError
from .constants import InversionConstants, make_constants


@dataclass(frozen=True)
class SeriesContext:
    """Center a, value b = f(a) and the Taylor coefficients of f at a."""

    f: Poly
    a: GaussianRational
    b: GaussianRational
    shifted: Poly

    @classmethod
    def build(cls, f: Poly, a: GaussLike) -> "SeriesContext":
        """
        Raises:
            PreconditionError: if deg f < 2
            CriticalCenterError: if f'(a) = 0
        """
        if f.degree < 2:
            raise PreconditionError("inverse series needs degree >= 2")
        a = GaussianRational.coerce(a)
        shifted = f.taylor_shift(a)
        if shifted[1].is_zero():
            raise CriticalCenterError(f"f'(a) = 0 at a = {a}")
        return cls(f=f, a=a, b=shifted[0], shifted=shifted)

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def slope(self) -> GaussianRational:
        """f'(a)."""
        return self.shifted[1]


def _tuples_with_weight(d: int, weight: int) -> Iterator[Tuple[int, ...]]:
    """All (m_2..m_d) >= 0 with sum (h-1) m_h == weight, lexicographic."""

    def rec(h: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if h == d:
            if remaining % (d - 1) == 0:
                yield (remaining // (d - 1),)
            return
        for m in range(remaining // (h - 1) + 1):
            for rest in rec(h + 1, remaining - m * (h - 1)):
                yield (m,) + rest

    yield from rec(2, weight)


def enumerate_indices(d: int, N: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield each (m_2, ..., m_d) of non-negative integers with sum (h-1) m_h < N once,
    in lexicographic order.
    """
    if d < 2 or N < 1:
        raise PreconditionError("enumerate_indices needs d >= 2 and N >= 1")

    def rec(h: int, budget: int) -> Iterator[Tuple[int, ...]]:
        if h > d:
            yield ()
            return
        for m in range(budget // (h - 1) + 1):
            for rest in rec(h + 1, budget - m * (h - 1)):
                yield (m,) + rest

    yield from rec(2, N - 1)


class _PowerTable:
    """Lazily extended powers of a fixed Gaussian rational."""

    def __init__(self, base: GaussianRational):
        self.base = base
        self.powers: List[GaussianRational] = [ONE]

    def __getitem__(self, k: int) -> GaussianRational:
        while len(self.powers) <= k:
            self.powers.append(self.powers[-1] * self.base)
        return self.powers[k]


def _multinomial(m: Sequence[int]) -> Tuple[int, int]:
    """(sum h m_h)!/prod m_h! and n = 1 + sum (h-1) m_h, with h starting at 2."""
    total = sum((h + 2) * mh for h, mh in enumerate(m))
    coefficient = factorial(total)
    for mh in m:
        coefficient //= factorial(mh)
    n = 1 + sum((h + 1) * mh for h, mh in enumerate(m))
    return coefficient, n


def series_coefficient(ctx: SeriesContext, n: int) -> GaussianRational:
    """
    Exact coefficient c_n = [(w-b)^n] g; c_0 = a.

    Args:
        ctx: Series context (f'(a) != 0 is guaranteed by construction)
        n: Coefficient index
    """
    if n < 0:
        raise PreconditionError("coefficient index must be non-negative")
    if n == 0:
        return ctx.a
    d = ctx.degree
    inv_slope = ctx.slope.reciprocal()
    ratios = [_PowerTable(-ctx.shifted[h] * inv_slope ** h) for h in range(2, d + 1)]

    total = ZERO
    for m in _tuples_with_weight(d, n - 1):
        weight, _ = _multinomial(m)
        term = GaussianRational(Fraction(weight))
        for table, mh in zip(ratios, m):
            if mh:
                term = term * table[mh]
        total = total + term
    return total * inv_slope / factorial(n)


def partial_sum(ctx: SeriesContext, w: GaussLike, N: int) -> GaussianRational:
    """
    a + sum_{n=1}^{N} c_n (w - b)^n, exactly.

    Each index tuple contributes
        (sum h m_h)! prod (-f~_h)^m_h (w-b)^n / (prod m_h! n! f~_1^(1 + sum h m_h))
    with n = 1 + sum (h-1) m_h.
    """
    if N < 1:
        raise PreconditionError("series order must be >= 1")
    w = GaussianRational.coerce(w)
    step = w - ctx.b
    if step.is_zero():
        return ctx.a
    d = ctx.degree
    inv_slope = ctx.slope.reciprocal()
    ratios = [_PowerTable(-ctx.shifted[h] * inv_slope ** h) for h in range(2, d + 1)]
    steps = _PowerTable(step)

    total = ZERO
    for m in enumerate_indices(d, N):
        weight, n = _multinomial(m)
        term = steps[n] * Fraction(weight, factorial(n))
        for table, mh in zip(ratios, m):
            if mh:
                term = term * table[mh]
        total = total + term
    return ctx.a + total * inv_slope


def compose_truncated(outer: Sequence[GaussLike], inner: Sequence[GaussLike], N: int) -> List[GaussianRational]:
    """
    Coefficients 0..N of outer(inner(z)).

    Raises:
        PreconditionError: if inner has a nonzero constant term
    """
    inner = [GaussianRational.coerce(c) for c in inner]
    if inner and not inner[0].is_zero():
        raise PreconditionError("inner series must have zero constant term")
    result = [ZERO] * (N + 1)
    power = [ONE] + [ZERO] * N
    for k, coefficient in enumerate(outer):
        coefficient = GaussianRational.coerce(coefficient)
        if k > N:
            break
        if not coefficient.is_zero():
            for j in range(N + 1):
                if not power[j].is_zero():
                    result[j] = result[j] + coefficient * power[j]
        nxt = [ZERO] * (N + 1)
        for i, pi in enumerate(power):
            if pi.is_zero():
                continue
            for j, cj in enumerate(inner):
                if i + j > N:
                    break
                if not cj.is_zero():
                    nxt[i + j] = nxt[i + j] + pi * cj
        power = nxt
    return result


def coefficient_tail_bound(ctx: SeriesContext, R: Fraction, n: int,
                           constants: Optional[InversionConstants] = None) -> Fraction:
    """
    Upper bound mu*R / (n * rho0^n) on |c_n|, rho0 = nu*R*|f'(a)|.

    Args:
        ctx: Series context
        R: Positive rational lower bound on the distance from a to the critical points
        n: Coefficient index, n >= 1
        constants: Constants for deg f
    """
    R = Fraction(R)
    if R <= 0 or n < 1:
        raise PreconditionError("tail bound needs R > 0 and n >= 1")
    constants = constants or make_constants(ctx.degree)
    slope_lo = sqrt_lower(ctx.slope.norm_sq(), 24)
    rho0 = constants.nu * R * slope_lo
    return constants.mu * R / (n * rho0 ** n)


def ratio_upper_bound(ctx: SeriesContext, w: GaussLike, R: Fraction,
                      constants: Optional[InversionConstants] = None) -> Fraction:
    """Upper bound on |w - b| / (nu * R * |f'(a)|), computed from exact squares."""
    constants = constants or make_constants(ctx.degree)
    step = GaussianRational.coerce(w) - ctx.b
    squared = step.norm_sq() / (constants.nu ** 2 * Fraction(R) ** 2 * ctx.slope.norm_sq())
    return sqrt_upper(squared, 24)


def series_remainder_bound(constants: InversionConstants, R: Fraction, ratio: Fraction, N: int) -> Fraction:
    """
    Bound on sum_{n>N} |c_n| |w-b|^n given ratio >= |w-b|/rho0, ratio < 1:
    mu*R*ratio^(N+1) / ((N+1)(1 - ratio)).
    """
    if ratio >= 1:
        raise PreconditionError("series evaluated outside its certified disc")
    return constants.mu * Fraction(R) * ratio ** (N + 1) / ((N + 1) * (1 - ratio))
