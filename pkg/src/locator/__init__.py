"""
Root Location Package
Lagroot - Certified Polynomial Root Finding

Spiderweb sampling, certified candidate generation, isolation and refinement.
"""

from .spiderweb import LatticeEvaluator, SpiderwebGrid, SpiderwebSample
from .certify import CertifiedRoot, certify_below, certify_sample, series_point
from .refinement import RootRefiner
from .isolation import approximate_all_roots, isolate_roots, linear_root, refiner_for
from .candidates import CandidateList, candidate_list, critical_chain, filtered_candidates

__all__ = [
    'LatticeEvaluator', 'SpiderwebGrid', 'SpiderwebSample',
    'CertifiedRoot', 'certify_below', 'certify_sample', 'series_point',
    'RootRefiner',
    'approximate_all_roots', 'isolate_roots', 'linear_root', 'refiner_for',
    'CandidateList', 'candidate_list', 'critical_chain', 'filtered_candidates',
]
