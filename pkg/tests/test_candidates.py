"""
Tests for critical chains and candidate lists
"""

import re
from fractions import Fraction

import pytest

from src.arithmetic import GaussianRational, power_of_two
from src.locator import candidate_list, critical_chain, filtered_candidates
from src.locator.candidates import filtered_precision
from src.polynomials import Poly
from src.utils.errors import NotSquareFreeError, PreconditionError

TRACE = re.compile(r"^j=\d+ k=\d+ q=\d+ a=\S+ (kept|dropped\((residual|critical)\))$")


def _near(z, target, radius):
    return (z - target).norm_sq() <= radius * radius


def test_critical_chain():
    chain = critical_chain(Poly((0, -3, 0, 1)), 4)
    assert len(chain) == 2
    first, second = chain
    assert first.epsilon == power_of_two(-6)
    assert len(first.items) == 2
    for target in (1, -1):
        assert any(_near(z, GaussianRational(target), first.epsilon) for z in first.items)
    assert list(second.items) == [GaussianRational(0)]
    assert critical_chain(Poly((1, 1)), 4) == []


def test_candidate_list_linear():
    candidates = candidate_list(Poly((-5, 1)), 4)
    assert list(candidates) == [GaussianRational(5)]
    assert candidates.epsilon == Fraction(1, 16)


def test_candidate_list_covers_double_root_at_zero():
    candidates = candidate_list(Poly((0, 0, 1)), 5)
    assert GaussianRational(0) in candidates.items
    assert len(candidates) > 1


def test_candidate_list_needs_positive_precision(sqrt2_poly):
    with pytest.raises(PreconditionError):
        candidate_list(sqrt2_poly, 0)


def test_filtered_precision(sqrt2_poly):
    assert filtered_precision(sqrt2_poly, 4) == 51
    assert filtered_precision(sqrt2_poly, 80) == 80
    assert filtered_precision(Poly((1, 1)), 7) == 7


def test_filtered_candidates_are_sound_and_complete(sqrt2_poly):
    candidates = filtered_candidates(sqrt2_poly, 4, debug=True)
    assert candidates.epsilon == power_of_two(-51)
    assert candidates.items
    for z in candidates.items:
        assert z.im == 0 or abs(z.im) <= candidates.epsilon
        v = abs(z.re)
        assert (v - candidates.epsilon) ** 2 <= 2 <= (v + candidates.epsilon) ** 2
    assert any(z.re > 0 for z in candidates.items)
    assert any(z.re < 0 for z in candidates.items)
    assert candidates.trace
    assert all(TRACE.match(line) for line in candidates.trace)
    assert sum(line.endswith("kept") for line in candidates.trace) == len(candidates.items)


def test_filtered_candidates_keep_nothing_near_the_origin():
    candidates = filtered_candidates(Poly((1, 0, 1)), 4)
    for z in candidates.items:
        assert z.norm_sq() > Fraction(1, 4)
        assert _near(z, GaussianRational(0, 1), Fraction(1, 16)) or _near(z, GaussianRational(0, -1), Fraction(1, 16))


def test_filtered_candidates_reject_repeated_roots():
    with pytest.raises(NotSquareFreeError):
        filtered_candidates(Poly.from_roots([1, 1]), 4)
