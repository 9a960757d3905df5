"""
Tests for the explicit local inverse series
"""

import random
from fractions import Fraction

import pytest

from src.arithmetic import GaussianRational, sqrt_bounds, sqrt_lower
from src.inversion import (SeriesContext, coefficient_tail_bound, compose_truncated, enumerate_indices,
                           make_constants, partial_sum, ratio_upper_bound, series_coefficient,
                           series_remainder_bound)
from src.polynomials import Poly
from src.utils.errors import CriticalCenterError, PreconditionError


def test_enumerate_indices():
    assert list(enumerate_indices(3, 3)) == [(0, 0), (0, 1), (1, 0), (2, 0)]
    assert list(enumerate_indices(2, 4)) == [(0,), (1,), (2,), (3,)]
    with pytest.raises(PreconditionError):
        list(enumerate_indices(2, 0))


def test_first_coefficients(sqrt2_poly):
    ctx = SeriesContext.build(sqrt2_poly, Fraction(3, 2))
    assert ctx.b == Fraction(1, 4)
    assert ctx.slope == 3
    assert series_coefficient(ctx, 0) == Fraction(3, 2)
    assert series_coefficient(ctx, 1) == Fraction(1, 3)
    assert series_coefficient(ctx, 2) == Fraction(-1, 27)


def test_partial_sum_encloses_sqrt2(sqrt2_poly):
    ctx = SeriesContext.build(sqrt2_poly, Fraction(3, 2))
    constants = make_constants(2)
    R = Fraction(3, 2)
    ratio = ratio_upper_bound(ctx, 0, R)
    assert ratio < 1
    lo, hi = sqrt_bounds(2, 80)
    for N in (1, 4, 12):
        value = partial_sum(ctx, 0, N)
        remainder = series_remainder_bound(constants, R, ratio, N)
        assert value.im == 0
        assert value.re - remainder <= hi.to_fraction()
        assert lo.to_fraction() <= value.re + remainder


def test_partial_sum_matches_coefficients():
    f = Poly((1, -2, 0, 1))
    ctx = SeriesContext.build(f, GaussianRational(1, 1))
    w = GaussianRational(Fraction(1, 7), Fraction(-1, 9))
    N = 6
    direct = sum((series_coefficient(ctx, n) * (w - ctx.b) ** n for n in range(1, N + 1)),
                 series_coefficient(ctx, 0))
    assert partial_sum(ctx, w, N) == direct


def test_series_inverts_the_polynomial():
    f = Poly((1, -2, 0, 1))
    ctx = SeriesContext.build(f, Fraction(2))
    N = 7
    outer = [series_coefficient(ctx, n) for n in range(N + 1)]
    inner = [0] + list(ctx.shifted.coeffs[1:])
    assert compose_truncated(outer, inner, N) == [2, 1] + [0] * (N - 1)


def test_partial_sum_at_b_is_center(sqrt2_poly):
    ctx = SeriesContext.build(sqrt2_poly, Fraction(3, 2))
    assert partial_sum(ctx, ctx.b, 5) == Fraction(3, 2)


def test_compose_truncated():
    assert compose_truncated([0, 1, 1], [0, 1], 3) == [0, 1, 1, 0]
    assert compose_truncated([1, 1], [0, 2], 2) == [1, 2, 0]
    with pytest.raises(PreconditionError):
        compose_truncated([1], [1, 1], 2)


def test_tail_bound_dominates_coefficients(sqrt2_poly):
    ctx = SeriesContext.build(sqrt2_poly, Fraction(3, 2))
    for n in range(1, 7):
        bound = coefficient_tail_bound(ctx, Fraction(3, 2), n)
        assert series_coefficient(ctx, n).norm_sq() <= bound ** 2


def test_context_preconditions(sqrt2_poly):
    with pytest.raises(CriticalCenterError):
        SeriesContext.build(sqrt2_poly, 0)
    with pytest.raises(PreconditionError):
        SeriesContext.build(Poly((1, 1)), 0)
    with pytest.raises(PreconditionError):
        series_remainder_bound(make_constants(2), Fraction(1), Fraction(1), 3)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_monomial_inverse_is_binomial_series(d):
    ctx = SeriesContext.build(Poly.x() ** d, 1)
    expected = Fraction(1)
    for n in range(1, 9):
        expected = expected * (Fraction(1, d) - (n - 1)) / n
        assert series_coefficient(ctx, n) == expected


def _small_gaussian(rng, bits=3):
    def part():
        return Fraction(rng.randint(-(1 << bits), 1 << bits), rng.randint(1, 4))
    return GaussianRational(part(), part())


@pytest.mark.parametrize("seed", range(20))
def test_values_move_little_near_a_root_free_centre(seed):
    # no roots in B(a, R) implies |f(z) - f(a)| < ((1+mu)^d - 1)|f(a)| on B(a, mu R)
    rng = random.Random(seed)
    d = rng.randint(2, 5)
    roots = [_small_gaussian(rng) for _ in range(d)]
    f = Poly.from_roots(roots, lead=_small_gaussian(rng) or 1)
    a = _small_gaussian(rng)
    nearest = min((a - root).norm_sq() for root in roots)
    if nearest == 0:
        return
    R = sqrt_lower(nearest, 16)
    mu = make_constants(d).mu
    fa = f(a)
    limit_sq = ((1 + mu) ** d - 1) ** 2 * fa.norm_sq()
    for _ in range(25):
        w = GaussianRational(Fraction(rng.randint(-99, 99), 100), Fraction(rng.randint(-99, 99), 100))
        if w.norm_sq() >= 1:
            continue
        z = a + w * (mu * R)
        assert (f(z) - fa).norm_sq() < limit_sq
