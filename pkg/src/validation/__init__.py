"""
Validation Package
Lagroot - Certified Polynomial Root Finding

Independent high-precision reference roots for cross-checking results.
"""

from .oracle import OracleRoot, ReferenceOracle, mpf_to_fraction, reference_roots

__all__ = ['OracleRoot', 'ReferenceOracle', 'mpf_to_fraction', 'reference_roots']
