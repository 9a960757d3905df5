"""
Tests for the root finding pipeline on arbitrary polynomials
"""

import random
from fractions import Fraction

import pytest

from src.arithmetic import GaussianRational, power_of_two
from src.polynomials import Poly, cauchy_bounds, parse_poly
from src.rootfinder import RootFinder, algebraic_bit, digit_range, find_roots
from src.utils.errors import ConstantPolynomialError, NonRealRootError, PreconditionError, RootSelectionError


def _floors(report):
    return [(entry.re_floor, entry.im_floor, entry.multiplicity) for entry in report.roots]


def test_sqrt2_report(sqrt2_poly):
    report = find_roots(sqrt2_poly, 20)
    assert report.unit == 1
    assert report.t == 20
    assert [entry.root_id for entry in report.roots] == [0, 1]
    assert _floors(report) == [(-1482911, 0, 1), (1482910, 0, 1)]


@pytest.mark.parametrize("text, t, expected", [
    ("(x-1)^2*(x+2)", 8, [(-512, 0, 1), (256, 0, 2)]),
    ("x^2", 5, [(0, 0, 2)]),
    ("x - 3/4", 2, [(3, 0, 1)]),
    ("x + 1/3", 4, [(-6, 0, 1)]),
])
def test_reports(text, t, expected):
    assert _floors(find_roots(parse_poly(text), t)) == expected


def test_unit_and_degree():
    report = find_roots(parse_poly("2*x^2 - 4"), 20)
    assert report.unit == 2
    assert report.degree == 2
    assert _floors(report) == [(-1482911, 0, 1), (1482910, 0, 1)]


def test_floors_are_consistent_across_precision(sqrt2_poly):
    coarse = find_roots(sqrt2_poly, 8)
    fine = find_roots(sqrt2_poly, 20)
    for low, high in zip(coarse.roots, fine.roots):
        assert low.root_id == high.root_id
        assert low.re_floor == high.re_floor >> 12
        assert low.im_floor == high.im_floor >> 12


def test_root_handles():
    finder = RootFinder(parse_poly("(x-1)^2*(x+2)"))
    assert len(finder.roots) == 2
    assert finder.handle(1).multiplicity == 2
    assert finder.factor_of(finder.handle(0)) == Poly((2, 1))
    with pytest.raises(RootSelectionError):
        finder.handle(2)


@pytest.mark.parametrize("k, bit", [(1, 0), (2, 1), (3, 1)])
def test_sqrt2_bits(sqrt2_poly, k, bit):
    assert algebraic_bit(sqrt2_poly, 1, k) == bit


def test_rational_root_bits():
    third = parse_poly("3*x - 1")
    assert [algebraic_bit(third, 0, k) for k in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    half = parse_poly("2*x - 1")
    assert algebraic_bit(half, 0, 1) == 1
    assert algebraic_bit(half, 0, 2) == 0


def test_digit_range(sqrt2_poly):
    assert digit_range(sqrt2_poly, 1, 1, 12) == [0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0]
    assert RootFinder(sqrt2_poly).bits(1, 2, 3) == [1, 1]


def test_negative_root_bits(sqrt2_poly):
    # -sqrt(2) = -2 + 0.1001..., so the digits are those of the two's complement expansion
    assert digit_range(sqrt2_poly, 0, 1, 4) == [1, 0, 0, 1]


def test_bit_errors(sqrt2_poly):
    with pytest.raises(NonRealRootError):
        algebraic_bit(parse_poly("x^2 + 1"), 0, 1)
    with pytest.raises(RootSelectionError):
        algebraic_bit(sqrt2_poly, 5, 1)
    with pytest.raises(PreconditionError):
        algebraic_bit(sqrt2_poly, 1, 0)
    with pytest.raises(ConstantPolynomialError):
        find_roots(Poly((3,)), 4)


def test_third_has_alternating_digits():
    assert digit_range(parse_poly("3*x - 1"), 0, 1, 64) == [0, 1] * 32


@pytest.mark.parametrize("seed", range(6))
def test_multiplicities_reconstruct_the_polynomial(seed):
    rng = random.Random(seed)
    target = rng.randint(1, 3)
    distinct = []
    while len(distinct) < target:
        z = GaussianRational(Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-4, 4), 4))
        if z not in distinct:
            distinct.append(z)
    counts = [rng.randint(1, 2) for _ in distinct]
    f = Poly.from_roots([z for z, count in zip(distinct, counts) for _ in range(count)])
    t = 16
    report = find_roots(f, t)
    assert sum(entry.multiplicity for entry in report.roots) == f.degree

    scale = power_of_two(-t)
    rebuilt = Poly.constant(report.unit)
    for entry in report.roots:
        centre = GaussianRational((entry.re_floor + Fraction(1, 2)) * scale, (entry.im_floor + Fraction(1, 2)) * scale)
        rebuilt = rebuilt * Poly.from_roots([centre] * entry.multiplicity)
    _, hi = cauchy_bounds(f)
    d = f.degree
    tolerance = d * (hi + 1) ** (d - 1) * scale
    for j in range(d + 1):
        assert (rebuilt[j] - f[j]).norm_sq() <= tolerance ** 2
