"""Geometry of the (s, q) tilt plane.

Regions, slopes and walls are all decided with exact rational arithmetic.
Region ``r`` (1, 2, 3) is where a tilt of ``sigma_{s,q}`` induces a stability
condition on ``Ku(X)_r``: inside Li's region, strictly below the segment
joining the two exceptional objects of that decomposition, and strictly
between their s-coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .chern import Direction, NumChern, PlanePoint, reduced_point, shift
from .errors import (
    NegativeDenominator,
    NoRealIntersection,
    NonPositiveAlphaSq,
    OutsideRegion,
    VerticalLine,
    ZeroOverZero,
)
from .exact import QuadraticSurd, as_rational, fmt, quadratic_roots, sqrt_rational
from .variety import VarietyParams, catalog

INF = math.inf

Slope = Union[Fraction, float]


@dataclass(frozen=True)
class StabilityParam:
    """A tilt-plane point with an optional second-tilt slope ``mu``."""

    point: PlanePoint
    mu: Optional[Slope] = None

    @classmethod
    def at(cls, s, q, mu=None) -> "StabilityParam":
        return cls(PlanePoint(s, q), None if mu is None else as_rational(mu))


def ab_to_sq(beta, alpha_sq) -> PlanePoint:
    """``(beta, alpha^2) -> (s, q) = (beta, (alpha^2 + beta^2)/2)``."""
    beta, alpha_sq = as_rational(beta), as_rational(alpha_sq)
    if alpha_sq <= 0:
        raise NonPositiveAlphaSq("alpha^2 must be positive")
    return PlanePoint(beta, (alpha_sq + beta * beta) / 2)


# --------------------------------------------------------------------------
# Li's region


def li_margin(p: PlanePoint, var: VarietyParams) -> Fraction:
    """``q - (s^2/2 - 3/(4d))``; positive above the lower parabola."""
    return p.q - (p.s * p.s / 2 - Fraction(3, 4 * var.degree))


def _tangent_margin(p: PlanePoint) -> Fraction:
    # tangents to q = s^2/2 at O(k) are q = k s - k^2/2; the binding ones
    # are k = floor(s) and floor(s) + 1
    k0 = math.floor(p.s)
    return min(p.q - (k * p.s - Fraction(k * k, 2)) for k in (k0, k0 + 1))


def in_li_region(p: PlanePoint, var: VarietyParams) -> bool:
    return li_margin(p, var) > 0 and _tangent_margin(p) > 0


def li_tangency_points(k: int, var: VarietyParams) -> Tuple[QuadraticSurd, QuadraticSurd]:
    """Abscissas where the tangent at ``O(k)`` meets ``s^2 - 2q = 3/(2d)``.

    They solve ``(s - k)^2 = 3/(2d)``.
    """
    r = sqrt_rational(var.li_constant)
    return (-r + k, r + k)


def li_boundary_q(s, var: VarietyParams) -> Fraction:
    """Height of Li's boundary at a rational abscissa ``s``."""
    s = as_rational(s)
    k0 = math.floor(s)
    tangent = max(k * s - Fraction(k * k, 2) for k in (k0, k0 + 1))
    return max(tangent, s * s / 2 - Fraction(3, 4 * var.degree))


# --------------------------------------------------------------------------
# Regions of the three Kuznetsov components


def _rank2_name(var: VarietyParams, dual_: bool) -> str:
    if var.is_gm:
        return "Udual" if dual_ else "U"
    return "E2dual" if dual_ else "E2"


def region_objects(r: int, var: VarietyParams):
    """Return ``(left, right, low, high)`` catalog names for region ``r``.

    ``left``/``right`` span the segment; ``low`` is shifted by one in the
    mu-window's lower bound and ``high`` gives the upper bound.
    """
    U = _rank2_name(var, False)
    Ud = _rank2_name(var, True)
    table = {
        1: ("O(-1)", U, "O(-1)", U),
        2: (U, "O", U, "O"),
        3: ("O", Ud, "O", Ud),
    }
    if r not in table:
        raise ValueError(f"region index must be 1, 2 or 3, got {r!r}")
    return table[r]


def region_endpoints(r: int, var: VarietyParams) -> Tuple[PlanePoint, PlanePoint]:
    left, right, _, _ = region_objects(r, var)
    return (
        reduced_point(catalog(var, left)),
        reduced_point(catalog(var, right)),
    )


def region_line(r: int, var: VarietyParams) -> Tuple[Fraction, Fraction]:
    """``(m, c)`` with the segment lying on ``q = m s + c``."""
    a, b = region_endpoints(r, var)
    m = (b.q - a.q) / (b.s - a.s)
    return (m, a.q - m * a.s)


def region_failure(p: PlanePoint, r: int, var: VarietyParams) -> Optional[str]:
    """Reason why ``p`` is outside region ``r``, or None if it is inside."""
    if li_margin(p, var) <= 0:
        return "below Li boundary"
    if _tangent_margin(p) <= 0:
        return "below a tangent line of Li's region"
    a, b = region_endpoints(r, var)
    if not (a.s < p.s < b.s):
        return "outside the segment's horizontal span"
    m, c = region_line(r, var)
    if p.q >= m * p.s + c:
        return "not below the segment"
    return None


def region_test(p: PlanePoint, r: int, var: VarietyParams) -> bool:
    return region_failure(p, r, var) is None


def require_region(p: PlanePoint, r: int, var: VarietyParams, what: str = "point") -> None:
    why = region_failure(p, r, var)
    if why is not None:
        raise OutsideRegion(f"{what} ({fmt(p.s)}, {fmt(p.q)}) not in region {r}: {why}")


# --------------------------------------------------------------------------
# Slopes


def slope(p: PlanePoint, v: NumChern, var: VarietyParams | None = None) -> Slope:
    """``mu_{s,q}(v) = (ch2 - q rk) / (c1 - s rk)`` (the factor d cancels)."""
    num = v.ch2 - p.q * v.rk
    den = v.c1 - p.s * v.rk
    if den < 0:
        raise NegativeDenominator(
            f"class {v} has negative H^2.ch1^s at s={fmt(p.s)}; shift it first"
        )
    if den == 0:
        if num == 0:
            raise ZeroOverZero(f"class {v} has zero central charge at {p}")
        return INF
    return num / den


def mu_window(p: PlanePoint, r: int, var: VarietyParams) -> Tuple[Slope, Slope]:
    """``[lo, hi)``: admissible second-tilt slopes at a point of region ``r``."""
    require_region(p, r, var)
    _, _, low, high = region_objects(r, var)
    lo = slope(p, shift(catalog(var, low), 1))
    hi = slope(p, catalog(var, high))
    return (lo, hi)


def mu_in_window(mu, window) -> bool:
    lo, hi = window
    return lo <= mu < hi


@dataclass(frozen=True)
class SlopeOrder:
    order: List[int]
    slopes: List[Slope]
    ties: List[Tuple[int, int]]


def slope_order(p: PlanePoint, vs: Sequence[NumChern], var: VarietyParams | None = None) -> SlopeOrder:
    """Indices of ``vs`` sorted by increasing slope; equal slopes are reported."""
    slopes = [slope(p, v) for v in vs]
    order = sorted(range(len(vs)), key=lambda i: slopes[i])
    ties = [
        (order[i], order[i + 1])
        for i in range(len(order) - 1)
        if slopes[order[i]] == slopes[order[i + 1]]
    ]
    return SlopeOrder(order, slopes, ties)


# --------------------------------------------------------------------------
# Walls


@dataclass(frozen=True)
class WallEndpoints:
    """Intersections ``B-``, ``B+`` of a line with the parabola ``q = s^2/2``."""

    b_minus: QuadraticSurd
    b_plus: QuadraticSurd
    gradient: Fraction
    point: PlanePoint

    def q_of(self, s: QuadraticSurd) -> QuadraticSurd:
        return (s - self.point.s) * self.gradient + self.point.q

    def quadratic(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Coefficients of ``s^2/2 - m s + (m s0 - q0)``."""
        m, p = self.gradient, self.point
        return (Fraction(1, 2), -m, m * p.s - p.q)


def wall_endpoints(p: PlanePoint, v: NumChern, var: VarietyParams | None = None) -> WallEndpoints:
    """Where the line through ``p`` and the point of ``v`` meets ``q = s^2/2``.

    ``B-`` is the intersection farther along the direction from ``p`` toward
    ``v``; ``B+`` the nearer one (possibly behind ``p``).
    """
    target = reduced_point(v)
    if isinstance(target, Direction):
        ds, dq = target.c1, target.ch2
    else:
        ds, dq = target.s - p.s, target.q - p.q
    if ds == 0:
        raise VerticalLine(f"line through {p} and {v} is vertical")
    m = dq / ds
    try:
        lo, hi = quadratic_roots(Fraction(1, 2), -m, m * p.s - p.q)
    except ValueError as exc:
        raise NoRealIntersection(str(exc)) from exc
    if ds > 0:
        return WallEndpoints(hi, lo, m, p)
    return WallEndpoints(lo, hi, m, p)


def tangent_at(k: int) -> Tuple[Fraction, Fraction]:
    """Tangent line ``q = k s - k^2/2`` to ``q = s^2/2`` at ``O(k)``."""
    return (Fraction(k), Fraction(-k * k, 2))
