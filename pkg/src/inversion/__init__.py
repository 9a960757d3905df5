"""
Inversion Package
Lagroot - Certified Polynomial Root Finding

Constants and explicit power series for local inverses of polynomials.
"""

from .constants import InversionConstants, lambda_delta, make_constants, mu_lower, nu_from_mu
from .series import (
    SeriesContext,
    coefficient_tail_bound,
    compose_truncated,
    enumerate_indices,
    partial_sum,
    ratio_upper_bound,
    series_coefficient,
    series_remainder_bound,
)

__all__ = [
    'InversionConstants', 'lambda_delta', 'make_constants', 'mu_lower', 'nu_from_mu',
    'SeriesContext', 'coefficient_tail_bound', 'compose_truncated', 'enumerate_indices',
    'partial_sum', 'ratio_upper_bound', 'series_coefficient', 'series_remainder_bound',
]
