"""
Polynomial Package
Lagroot - Certified Polynomial Root Finding

Dense polynomials over Q(i), square-free decomposition, root bounds and text formats.
"""

from .poly import Poly, derivative, divrem, evaluate, format_poly, poly_gcd, taylor_shift
from .squarefree import SquareFreeDecomposition, square_free_decompose
from .bounds import (
    bit_size,
    cauchy_bounds,
    max_coefficient_ratio,
    separation_bound,
    separation_exponent,
)
from .parsing import format_coefficients_json, parse_coefficients_json, parse_poly

__all__ = [
    'Poly', 'derivative', 'divrem', 'evaluate', 'format_poly', 'poly_gcd', 'taylor_shift',
    'SquareFreeDecomposition', 'square_free_decompose',
    'bit_size', 'cauchy_bounds', 'max_coefficient_ratio', 'separation_bound', 'separation_exponent',
    'format_coefficients_json', 'parse_coefficients_json', 'parse_poly',
]
