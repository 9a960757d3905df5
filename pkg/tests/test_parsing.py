"""
Tests for the polynomial expression and coefficient-array formats
"""

from fractions import Fraction

import pytest

from src.arithmetic import GaussianRational
from src.polynomials import Poly, format_coefficients_json, format_poly, parse_coefficients_json, parse_poly
from src.utils.errors import ParseError


@pytest.mark.parametrize("text, expected", [
    ("x^2 - 2", Poly((-2, 0, 1))),
    ("(x-1)^2*(x+1)", Poly.from_roots([1, 1, -1])),
    ("(1+2*i)*x^2 - 1/2", Poly((Fraction(-1, 2), 0, GaussianRational(1, 2)))),
    ("2x + 3", Poly((3, 2))),
    ("x**3", Poly((0, 0, 0, 1))),
    ("-x/4", Poly((0, Fraction(-1, 4)))),
    ("z^2 + i", Poly((GaussianRational(0, 1), 0, 1))),
    ("(x - 1)(x + 1)", Poly((-1, 0, 1))),
])
def test_parse_poly(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("text", ["", "x^", "x/(x+1)", "x + $", "1/0", "(x+1", "x^-1", "x^^2"])
def test_parse_poly_rejects(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_printed_polynomial_parses_back():
    f = Poly((Fraction(-1, 2), GaussianRational(0, -3), GaussianRational(1, 2), 0, 7))
    assert parse_poly(format_poly(f)) == f


def test_coefficient_json():
    assert parse_coefficients_json('["-2", "0", "1"]') == Poly((-2, 0, 1))
    assert parse_coefficients_json('[1, "1/2*i"]') == Poly((1, GaussianRational(0, Fraction(1, 2))))
    f = Poly((Fraction(3, 4), GaussianRational(1, -1)))
    assert format_coefficients_json(f) == '["3/4", "1-i"]'
    assert parse_coefficients_json(format_coefficients_json(f)) == f


@pytest.mark.parametrize("text", ["[1, 2", '{"a": 1}', "[true]", "[1.5]", '["x"]'])
def test_coefficient_json_rejects(text):
    with pytest.raises(ParseError):
        parse_coefficients_json(text)
