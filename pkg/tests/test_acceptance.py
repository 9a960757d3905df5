"""
End-to-end acceptance checks against the reference oracle

Every check runs on a few cases by default; the full case counts are
marked slow and run with --runslow.
"""

import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arithmetic import GaussianRational, abs_lower, power_of_two
from src.inversion import SeriesContext, coefficient_tail_bound, compose_truncated, series_coefficient
from src.locator import approximate_all_roots, candidate_list, filtered_candidates
from src.polynomials import Poly, cauchy_bounds, parse_poly, poly_gcd, separation_bound, square_free_decompose
from src.rootfinder import RootFinder, approximate_roots, digit_range, find_roots, stable_anchors
from src.validation import reference_roots

slow = pytest.mark.slow


def _seeds(total, quick):
    """range(total), with every seed from quick on marked slow."""
    return [seed if seed < quick else pytest.param(seed, marks=slow) for seed in range(total)]


def _coefficient(rng, bits=4):
    def rational():
        top = (1 << bits) - 1
        return Fraction(rng.randint(-top, top), rng.randint(1, top))
    return GaussianRational(rational(), rational() if rng.random() < 0.5 else 0)


def _random_poly(rng, degree, bits=4):
    while True:
        f = Poly(tuple(_coefficient(rng, bits) for _ in range(degree + 1)))
        if f.degree == degree:
            return f


def _random_square_free(rng, degree, bits=4):
    while True:
        f = _random_poly(rng, degree, bits)
        if f.is_square_free():
            return f


def _with_repeated_factor(rng, degree, bits=4):
    """A polynomial of degree max(degree, 2) with a squared factor."""
    base = _random_poly(rng, rng.randint(1, max(1, degree // 2)), bits)
    rest = degree - 2 * base.degree
    return base ** 2 * _random_poly(rng, rest, bits) if rest > 0 else base ** 2


def _implied_value(entry, t):
    scale = power_of_two(-t)
    return GaussianRational(entry.re_floor * scale, entry.im_floor * scale)


def _in_cell(entry, t, root):
    """The reference root is consistent with the floors of entry at precision t."""
    low = _implied_value(entry, t)
    eps, r = power_of_two(-t), root.certified_radius
    return (low.re - r <= root.value.re <= low.re + eps + r
            and low.im - r <= root.value.im <= low.im + eps + r)


def _assert_matches_reference(f, t):
    """Bijection between reported and reference roots with equal multiplicities."""
    report = find_roots(f, t)
    references = reference_roots(f, t + 8)
    assert len(report.roots) == len(references)
    assert report.degree == f.degree
    assert any(
        all(entry.multiplicity == multiplicity and _in_cell(entry, t, root)
            for entry, (root, multiplicity) in zip(order, references))
        for order in itertools.permutations(report.roots)
    ), f"no root-by-root match between report and reference for {f}"


def _oracle_case(seed):
    """Degrees 1-5 with up to 16-bit parts; every fourth case has a squared factor."""
    rng = random.Random(seed)
    degree = rng.randint(1, 5)
    if seed % 4 == 0:
        return _with_repeated_factor(rng, degree, bits=rng.randint(2, 8))
    return _random_poly(rng, degree, bits=rng.randint(2, 16))


def test_oracle_cases_mix_repeated_factors():
    cases = [_oracle_case(seed) for seed in range(200)]
    assert sum(not f.is_square_free() for f in cases) >= 50
    assert all(1 <= f.degree <= 5 for f in cases)


@pytest.mark.parametrize("seed", _seeds(200, 4))
@pytest.mark.parametrize("t", [8, pytest.param(32, marks=slow), pytest.param(128, marks=slow)])
def test_oracle_equivalence(seed, t):
    _assert_matches_reference(_oracle_case(seed), t)


@pytest.mark.parametrize("d", range(2, 7))
def test_binomial_series_of_monomials(d):
    ctx = SeriesContext.build(Poly.x() ** d, 1)
    for n in range(21):
        expected = Fraction(1)
        for k in range(n):
            expected *= Fraction(1, d) - k
        assert series_coefficient(ctx, n) == expected / factorial(n)


@pytest.mark.parametrize("seed", _seeds(50, 10))
def test_two_sided_inverse_identity(seed):
    rng = random.Random(seed)
    f = _random_poly(rng, rng.randint(2, 5))
    a = _coefficient(rng)
    while f.derivative()(a).is_zero():
        a = _coefficient(rng)
    ctx = SeriesContext.build(f, a)
    outer = [series_coefficient(ctx, n) for n in range(9)]
    inner = [0] + list(ctx.shifted.coeffs[1:])
    assert compose_truncated(outer, inner, 8) == [a, 1] + [0] * 7


@pytest.mark.parametrize("seed", _seeds(50, 5))
def test_coefficient_tail_bound(seed):
    rng = random.Random(1000 + seed)
    f = _random_square_free(rng, rng.randint(2, 4))
    criticals = approximate_all_roots(f.derivative(), power_of_two(-20))
    while True:
        a = _coefficient(rng)
        R = min(abs_lower(a - c.value, 24) - c.radius for c in criticals)
        if R > 0:
            break
    ctx = SeriesContext.build(f, a)
    for n in range(1, 13):
        assert series_coefficient(ctx, n).norm_sq() <= coefficient_tail_bound(ctx, R, n) ** 2


@pytest.mark.parametrize("seed", _seeds(100, 2))
@pytest.mark.parametrize("t", [8, pytest.param(32, marks=slow)])
def test_filtered_candidates_two_sided(seed, t):
    rng = random.Random(2000 + seed)
    f = _random_square_free(rng, rng.randint(2, 5) if seed >= 2 else 2, bits=3)
    candidates = filtered_candidates(f, t)
    references = [root for root, _ in reference_roots(f, t + 8)]
    eps = power_of_two(-t)

    def near(z, root):
        reach = eps + root.certified_radius
        return (z - root.value).norm_sq() <= reach * reach

    assert all(any(near(z, root) for root in references) for z in candidates.items)
    assert all(any(near(z, root) for z in candidates.items) for root in references)


@pytest.mark.parametrize("seed", _seeds(50, 2))
def test_precision_ladder_is_stable(seed):
    rng = random.Random(3000 + seed)
    f = _random_poly(rng, rng.randint(2, 4))
    finder = RootFinder(f)
    ladder = [4, 8, 16, 32, 64, 128]
    reports = {t: finder.report(t) for t in ladder}
    for low, high in itertools.combinations(ladder, 2):
        assert len(reports[low].roots) == len(reports[high].roots)
        for coarse, fine in zip(reports[low].roots, reports[high].roots):
            assert coarse.root_id == fine.root_id
            assert coarse.multiplicity == fine.multiplicity
            assert coarse.re_floor == fine.re_floor >> (high - low)
            assert coarse.im_floor == fine.im_floor >> (high - low)


def test_known_constants():
    report = find_roots(parse_poly("x^2 - 2"), 20)
    assert report.roots[1].re_floor == 1482910
    assert digit_range(parse_poly("3*x - 1"), 0, 1, 64) == [0, 1] * 32


gaussian_coefficients = st.lists(
    st.builds(GaussianRational, st.integers(-5, 5), st.integers(-3, 3)), min_size=2, max_size=5
)


def _check_exact_algebra(f_coeffs, g_coeffs):
    f, g = Poly.from_coefficients(f_coeffs), Poly.from_coefficients(g_coeffs)
    if not g.is_zero():
        q, r = f.divrem(g)
        assert q * g + r == f
        assert r.degree < g.degree
    if not (f.is_zero() and g.is_zero()):
        h = poly_gcd(f, g)
        assert h.divides(f) and h.divides(g)
        assert h.is_zero() or h.leading_coefficient == 1
    product = f * g
    if not product.is_constant():
        assert square_free_decompose(product).reconstruct() == product


@given(gaussian_coefficients, gaussian_coefficients)
def test_exact_algebra(f_coeffs, g_coeffs):
    _check_exact_algebra(f_coeffs, g_coeffs)


@slow
@settings(max_examples=1000)
@given(gaussian_coefficients, gaussian_coefficients)
def test_exact_algebra_full(f_coeffs, g_coeffs):
    _check_exact_algebra(f_coeffs, g_coeffs)


@pytest.mark.parametrize("seed", _seeds(200, 5))
def test_cauchy_and_separation_soundness(seed):
    rng = random.Random(4000 + seed)
    f = _random_square_free(rng, rng.randint(2, 5))
    lo, hi = cauchy_bounds(f)
    eta = separation_bound(f, f)
    roots = [root for root, _ in reference_roots(f, 24)]
    for root in roots:
        r = root.certified_radius
        assert (lo - r) ** 2 <= root.value.norm_sq() or lo <= r
        assert root.value.norm_sq() <= (hi + r) ** 2
    for i, first in enumerate(roots):
        for second in roots[i + 1:]:
            reach = eta - first.certified_radius - second.certified_radius
            assert reach <= 0 or (first.value - second.value).norm_sq() >= reach * reach


@slow
def test_close_roots_get_distinct_anchors():
    f = Poly.from_roots([1, 1 + power_of_two(-40)])
    table = stable_anchors(f)
    assert len(table) == 2
    assert [z.re < 1 + power_of_two(-41) for z in table.anchors] == [True, False]


@slow
def test_cube_root_approximations():
    f = parse_poly("x^3 - 2")
    eps = power_of_two(-32)
    references = reference_roots(f, 40)
    for z, _ in approximate_roots(f, 32):
        assert any((z - root.value).norm_sq() <= (eps + root.certified_radius) ** 2 for root, _ in references)


def test_unfiltered_candidates_cover_every_root(sqrt2_poly):
    candidates = candidate_list(sqrt2_poly, 10)
    eps = candidates.epsilon
    for sign in (1, -1):
        assert any(
            z.im ** 2 <= eps ** 2 and (abs(z.re) - eps) ** 2 <= 2 <= (abs(z.re) + eps) ** 2 and z.re * sign > 0
            for z in candidates.items
        )


def test_conjugate_roots_of_real_polynomials():
    report = find_roots(parse_poly("x^3 - x + 1"), 16)
    floors = {(entry.re_floor, entry.im_floor) for entry in report.roots}
    upper = [(re_floor, im_floor) for re_floor, im_floor in floors if im_floor > 0]
    assert len(upper) == 1
    for re_floor, im_floor in upper:
        # floor(-y) = -floor(y) - 1 for non-integral y
        assert (re_floor, -im_floor - 1) in floors
