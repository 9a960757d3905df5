"""
Digit Expansion Module
Lagroot - Certified Polynomial Root Finding

Exact floors of Re(2^t a) and Im(2^t a) for a root a of a square-free f.

A floor is settled as soon as a certified interval around Re(2^t a)
contains no integer. Otherwise the interval pins a single candidate u and
the sign of Re(2^t a) - u is decided exactly: with g(z) = f(2^-t (2z + u))
and h(z) = conj(g)(-z), Re(2^t a) = u exactly when the corresponding root
of g is also a root of h, and otherwise |Re(2^t a) - u| >= xi = sep(g, h).
The imaginary part is the real part of the root -i*a of f(iz).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Callable, Tuple

from ..arithmetic import I, GaussianRational, dyadic_floor_scaled, power_of_two
from ..locator import CertifiedRoot, linear_root, refiner_for
from ..polynomials import Poly, separation_bound
from ..utils.config import get_config
from ..utils.logging import get_logger
from .anchors import stable_anchors


logger = get_logger(__name__)

Approximator = Callable[[Fraction], CertifiedRoot]


@dataclass(frozen=True)
class ComponentView:
    """A polynomial and a certified approximator for one of its roots; the component is Re."""

    poly: Poly
    approximate: Approximator


def _views(f: Poly, root_id: int) -> Tuple[ComponentView, ComponentView]:
    point = stable_anchors(f).point(root_id)
    refiner = refiner_for(f)

    def real_part(radius: Fraction) -> CertifiedRoot:
        return refiner.refine(point, radius)

    def imaginary_part(radius: Fraction) -> CertifiedRoot:
        refined = refiner.refine(point, radius)
        return CertifiedRoot(refined.value * -I, refined.radius)

    return ComponentView(f, real_part), ComponentView(f.compose_linear(I, 0), imaginary_part)


def _interval(view: ComponentView, t: int, radius: Fraction) -> Tuple[Fraction, Fraction]:
    """Certified [lo, hi] around Re(2^t a)."""
    point = view.approximate(radius)
    scale = power_of_two(t)
    center = point.value.re * scale
    spread = point.radius * scale
    return center - spread, center + spread


def compare_component(view: ComponentView, t: int, u: int) -> int:
    """
    Exact sign of Re(2^t a) - u.

    Refines the approximation until 2^t * radius < xi/4 and compares the
    approximation with u: within xi/2 means equality.
    """
    g = view.poly.compose_linear(power_of_two(1 - t), Fraction(u) * power_of_two(-t))
    xi = separation_bound(g, g.conj_reflect())
    lo, hi = _interval(view, t, xi / 4 * power_of_two(-t) / 2)
    approx = (lo + hi) / 2
    if abs(approx - u) < xi / 2:
        return 0
    return 1 if approx > u else -1


def component_floor(view: ComponentView, t: int) -> int:
    """floor(Re(2^t a)) for the root behind view."""
    rounds = int(get_config().get_solver_setting('expansion', 'interval_rounds', 4))
    lo = hi = Fraction(0)
    for round_ in range(max(rounds, 1)):
        lo, hi = _interval(view, t, power_of_two(-(t + (4 << round_))))
        if floor(lo) == floor(hi):
            return floor(lo)
    # the interval is narrower than 1/2 and contains exactly one integer
    u = floor(hi)
    sign = compare_component(view, t, u)
    logger.debug(f"sign test at t={t}, u={u}: {sign}")
    return u if sign >= 0 else u - 1


def digit_expansion(f: Poly, root_id: int, t: int) -> Tuple[int, int]:
    """
    (floor(Re(a 2^t)), floor(Im(a 2^t))) for root root_id of a square-free f.

    Raises:
        NotSquareFreeError: if f has a repeated root
        RootSelectionError: if root_id is out of range
    """
    if f.degree == 1:
        stable_anchors(f).point(root_id)
        root = GaussianRational.coerce(linear_root(f))
        return dyadic_floor_scaled(root.re, t), dyadic_floor_scaled(root.im, t)
    real_view, imaginary_view = _views(f, root_id)
    return component_floor(real_view, t), component_floor(imaginary_view, t)


def is_real_root(f: Poly, root_id: int) -> bool:
    """Exact test Im(a) == 0 for root root_id of a square-free f."""
    if f.degree == 1:
        stable_anchors(f).point(root_id)
        return GaussianRational.coerce(linear_root(f)).is_real()
    _, imaginary_view = _views(f, root_id)
    point = imaginary_view.approximate(Fraction(1, 16))
    if abs(point.value.re) > point.radius:
        return False
    return compare_component(imaginary_view, 0, 0) == 0
