"""
Lagroot - Certified Polynomial Root Finding

Exact binary expansions of the roots of polynomials with Gaussian rational
coefficients, computed from explicit inverse power series.
"""

__version__ = "0.1.0"
