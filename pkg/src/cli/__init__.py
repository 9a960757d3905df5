"""
CLI Package
Lagroot - Certified Polynomial Root Finding
"""

from .request import CliRequest, build_request, run

__all__ = ['CliRequest', 'build_request', 'run']
