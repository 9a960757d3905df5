"""
Polynomial Text Formats
Lagroot - Certified Polynomial Root Finding

Two input forms are accepted:

- expressions in x with +, -, *, /, ^, parentheses and Gaussian literals,
  e.g. "(x-1)^2*(x+1)" or "(1+2*i)*x^2 - 1/2";
- a JSON array of coefficient strings, index = power, e.g. '["-2", "0", "1"]'.

format_poly (in poly.py) and format_coefficients_json are the inverse printers.
"""

import json
import re
from fractions import Fraction
from typing import List, Tuple

from ..arithmetic import I, format_gaussian, parse_gaussian
from ..utils.errors import ArithmeticDomainError, ParseError
from .poly import Poly


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xXzZ])|(?P<unit>i)|(?P<op>\*\*|[-+*/^()]))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens: List[Tuple[str, str]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, '^' if value == '**' else value))
        pos = match.end()
    return tokens


class _ExpressionParser:
    """Recursive-descent parser producing a dense Poly."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Tuple[str, str]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ('end', '')

    def _take(self) -> Tuple[str, str]:
        token = self._peek()
        self.pos += 1
        return token

    def _fail(self, message: str) -> ParseError:
        return ParseError(f"{message} in {self.text!r}")

    def parse(self) -> Poly:
        if not self.tokens:
            raise self._fail("empty polynomial")
        result = self._expr()
        if self._peek()[0] != 'end':
            raise self._fail(f"unexpected token {self._peek()[1]!r}")
        return result

    def _expr(self) -> Poly:
        result = self._term()
        while self._peek() in (('op', '+'), ('op', '-')):
            op = self._take()[1]
            rhs = self._term()
            result = result + rhs if op == '+' else result - rhs
        return result

    def _starts_factor(self) -> bool:
        kind, value = self._peek()
        return kind in ('num', 'var', 'unit') or (kind, value) == ('op', '(')

    def _term(self) -> Poly:
        result = self._unary()
        while True:
            kind, value = self._peek()
            if (kind, value) == ('op', '*'):
                self._take()
                result = result * self._unary()
            elif (kind, value) == ('op', '/'):
                self._take()
                divisor = self._unary()
                if not divisor.is_constant():
                    raise self._fail("division by a non-constant")
                if divisor.is_zero():
                    raise self._fail("division by zero")
                result = result.scale(divisor.leading_coefficient.reciprocal())
            elif self._starts_factor():
                result = result * self._power()
            else:
                return result

    def _unary(self) -> Poly:
        kind, value = self._peek()
        if (kind, value) == ('op', '-'):
            self._take()
            return -self._unary()
        if (kind, value) == ('op', '+'):
            self._take()
            return self._unary()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        if self._peek() == ('op', '^'):
            self._take()
            kind, value = self._take()
            if kind != 'num':
                raise self._fail("exponent must be a non-negative integer")
            base = base ** int(value)
        return base

    def _atom(self) -> Poly:
        kind, value = self._take()
        if kind == 'num':
            return Poly.constant(Fraction(int(value)))
        if kind == 'var':
            return Poly.x()
        if kind == 'unit':
            return Poly.constant(I)
        if (kind, value) == ('op', '('):
            inner = self._expr()
            if self._take() != ('op', ')'):
                raise self._fail("missing ')'")
            return inner
        raise self._fail(f"unexpected token {value!r}" if value else "unexpected end")


def parse_poly(text: str) -> Poly:
    """
    Parse a polynomial expression into dense coefficients.

    Raises:
        ParseError: on malformed input
    """
    try:
        return _ExpressionParser(text).parse()
    except ArithmeticDomainError as exc:
        raise ParseError(str(exc)) from exc


def parse_coefficients_json(text: str) -> Poly:
    """Parse a JSON array of coefficient strings (index = power)."""
    try:
        values = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid coefficient JSON: {exc}") from exc
    if not isinstance(values, list):
        raise ParseError("coefficient JSON must be an array")
    coeffs = []
    for value in values:
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise ParseError(f"coefficient must be a string or integer, got {value!r}")
        coeffs.append(parse_gaussian(str(value)) if isinstance(value, str) else value)
    return Poly(tuple(coeffs))


def format_coefficients_json(f: Poly) -> str:
    """Inverse of parse_coefficients_json; the zero polynomial is []."""
    return json.dumps([format_gaussian(c) for c in f.coeffs])
