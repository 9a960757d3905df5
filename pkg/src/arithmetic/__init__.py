"""
Exact Arithmetic Package
Lagroot - Certified Polynomial Root Finding

Rationals, Gaussian rationals and directed-rounding dyadic bounds.
"""

from .rational import (
    Rational,
    as_rational,
    ceil_log2,
    dyadic_floor_scaled,
    floor_log2,
    format_rational,
    parse_rational,
    power_of_two,
    rat_cmp,
    rat_div,
)
from .gaussian import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    conj,
    format_gaussian,
    gauss_div,
    gauss_pow,
    norm_sq,
    parse_gaussian,
)
from .dyadic import (
    Dyadic,
    abs_bounds,
    abs_lower,
    abs_upper,
    format_dyadic,
    parse_dyadic,
    round_to_lattice,
    sqrt_bounds,
    sqrt_lower,
    sqrt_upper,
)

__all__ = [
    'Rational', 'as_rational', 'ceil_log2', 'dyadic_floor_scaled', 'floor_log2',
    'format_rational', 'parse_rational', 'power_of_two', 'rat_cmp', 'rat_div',
    'I', 'ONE', 'ZERO', 'GaussianRational', 'conj', 'format_gaussian', 'gauss_div',
    'gauss_pow', 'norm_sq', 'parse_gaussian',
    'Dyadic', 'abs_bounds', 'abs_lower', 'abs_upper', 'format_dyadic', 'parse_dyadic',
    'round_to_lattice', 'sqrt_bounds', 'sqrt_lower', 'sqrt_upper',
]
