"""
Root Finder Package
Lagroot - Certified Polynomial Root Finding

Stable root identities, exact binary expansions and root reports.
"""

from .anchors import StableRootTable, approximate_roots, stable_anchors
from .expansion import ComponentView, component_floor, compare_component, digit_expansion, is_real_root
from .report import RootEntry, RootReport, format_binary, parse_binary, parse_text, render_text
from .finder import RootFinder, RootHandle, algebraic_bit, digit_range, find_roots

__all__ = [
    'StableRootTable', 'approximate_roots', 'stable_anchors',
    'ComponentView', 'component_floor', 'compare_component', 'digit_expansion', 'is_real_root',
    'RootEntry', 'RootReport', 'format_binary', 'parse_binary', 'parse_text', 'render_text',
    'RootFinder', 'RootHandle', 'algebraic_bit', 'digit_range', 'find_roots',
]
