"""
Tests for Gaussian rational arithmetic and its text format
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.arithmetic import (I, ONE, ZERO, GaussianRational, conj, format_gaussian, gauss_div, gauss_pow,
                            norm_sq, parse_gaussian)
from src.utils.errors import ArithmeticDomainError, ParseError

rationals = st.fractions(max_denominator=1000).filter(lambda q: abs(q) < 1000)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_field_operations():
    a = GaussianRational(1, 2)
    b = GaussianRational(3, -1)
    assert a * b == GaussianRational(5, 5)
    assert (a * b) / b == a
    assert a + 1 == GaussianRational(2, 2)
    assert 1 - a == GaussianRational(0, -2)
    assert a * Fraction(1, 2) == GaussianRational(Fraction(1, 2), 1)
    assert gauss_div(GaussianRational(5, 5), b) == a


def test_reciprocal_of_zero():
    with pytest.raises(ArithmeticDomainError):
        ZERO.reciprocal()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_powers_and_conjugates():
    assert I ** 2 == -1
    assert gauss_pow(ZERO, 0) == 1
    assert gauss_pow(GaussianRational(1, 1), 4) == -4
    assert conj(GaussianRational(2, 3)) == GaussianRational(2, -3)
    assert norm_sq(GaussianRational(3, 4)) == 25


def test_equality_with_scalars_is_hash_consistent():
    assert GaussianRational(3) == 3
    assert hash(GaussianRational(3)) == hash(3)
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert GaussianRational(0, 1) != 0


@pytest.mark.parametrize("text, expected", [
    ("1/2+3/4*i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
    ("-i", GaussianRational(0, -1)),
    ("2-i", GaussianRational(2, -1)),
    ("1/4*i", GaussianRational(0, Fraction(1, 4))),
    ("3", GaussianRational(3)),
    (" -5/10 ", GaussianRational(Fraction(-1, 2))),
])
def test_parse_gaussian(text, expected):
    assert parse_gaussian(text) == expected


@pytest.mark.parametrize("text", ["", "1/0", "1++2", "i i", "x", "/3"])
def test_parse_gaussian_rejects(text):
    with pytest.raises(ParseError):
        parse_gaussian(text)


@pytest.mark.parametrize("z, expected", [
    (GaussianRational(0, 1), "i"),
    (GaussianRational(0, Fraction(-1, 4)), "-1/4*i"),
    (GaussianRational(Fraction(1, 2), -1), "1/2-i"),
    (GaussianRational(3), "3"),
])
def test_format_gaussian(z, expected):
    assert format_gaussian(z) == expected


@given(gaussians)
def test_format_is_parseable(z):
    assert parse_gaussian(format_gaussian(z)) == z


@given(gaussians, gaussians)
def test_norm_is_multiplicative(a, b):
    assert norm_sq(a * b) == norm_sq(a) * norm_sq(b)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert conj(a * b) == conj(a) * conj(b)
    if not a.is_zero():
        assert a * a.reciprocal() == ONE
        assert gauss_div(b, a) * a == b
