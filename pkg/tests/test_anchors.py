"""
Tests for stable root identities
"""

import pytest

from src.arithmetic import GaussianRational, power_of_two
from src.polynomials import Poly
from src.rootfinder import approximate_roots, stable_anchors
from src.utils.errors import NotSquareFreeError, RootSelectionError


def test_anchors_are_sorted_and_separated(sqrt2_poly):
    table = stable_anchors(sqrt2_poly)
    assert len(table) == 2
    assert table.eta == power_of_two(-84)
    negative, positive = table.anchors
    assert negative.re < 0 < positive.re
    assert (positive - negative).norm_sq() > (3 * table.eta / 5) ** 2
    for point in table.points:
        assert point.radius < table.eta / 5


def test_anchor_lookup(sqrt2_poly):
    table = stable_anchors(sqrt2_poly)
    assert table.point(1).value == table.anchors[1]
    with pytest.raises(RootSelectionError):
        table.point(2)


def test_anchors_need_square_free_input():
    with pytest.raises(NotSquareFreeError):
        stable_anchors(Poly.from_roots([3, 3]))


def test_coarse_precision_returns_anchors():
    f = Poly((-5, 1))
    assert approximate_roots(f, 10) == [(GaussianRational(5), 0)]


def test_root_ids_are_stable_across_precision():
    f = Poly((1, 0, 1))
    coarse = dict((root_id, z) for z, root_id in approximate_roots(f, 32))
    fine = dict((root_id, z) for z, root_id in approximate_roots(f, 100))
    assert set(coarse) == set(fine) == {0, 1}
    for root_id in (0, 1):
        assert (coarse[root_id] - fine[root_id]).norm_sq() < power_of_two(-62)
        target = GaussianRational(0, 1) if fine[root_id].im > 0 else GaussianRational(0, -1)
        assert (fine[root_id] - target).norm_sq() < power_of_two(-200)
    assert {coarse[0].im > 0, coarse[1].im > 0} == {True, False}


def test_refined_values_are_accurate(sqrt2_poly):
    for z, root_id in approximate_roots(sqrt2_poly, 150):
        eps = power_of_two(-150)
        v = abs(z.re)
        assert abs(z.im) < eps
        assert (v - eps) ** 2 <= 2 <= (v + eps) ** 2
        assert (z.re > 0) == (root_id == 1)
