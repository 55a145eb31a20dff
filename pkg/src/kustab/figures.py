"""Deterministic SVG pictures of the tilt plane.

Every anchor (marked point, tangency abscissa, wall endpoint) is computed
exactly and only turned into a float when written.  Curves are sampled at a
fixed 256 points per unit of ``s`` so output is byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .chern import Direction, NumChern, PlanePoint, reduced_point
from .errors import EmptyWindow
from .exact import QuadraticSurd, as_rational
from .tiltplane import (
    li_tangency_points,
    region_endpoints,
    region_line,
    wall_endpoints,
)
from .variety import VarietyParams, catalog

SAMPLES_PER_UNIT = 256
KINDS = ("li_boundary", "regions", "wall", "slope_compare")

Exact = Union[Fraction, QuadraticSurd]

RED = "#d62728"
BLUE = "#1f77b4"
GREY = "#7f7f7f"


@dataclass(frozen=True)
class Window:
    s0: Fraction
    s1: Fraction
    q0: Fraction
    q1: Fraction

    @classmethod
    def of(cls, s0, s1, q0, q1) -> "Window":
        return cls(*(as_rational(x) for x in (s0, s1, q0, q1)))


DEFAULT_WINDOWS = {
    "li_boundary": Window.of(-2, 2, "-1/4", "5/4"),
    "regions": Window.of("-3/2", "3/2", "-1/10", "3/4"),
    "wall": Window.of("-1/2", "7/2", "-1/2", "9/2"),
    "slope_compare": Window.of(-2, 2, "-1/2", 2),
}


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    window: Optional[Window] = None
    width_px: int = 800
    height_px: int = 600
    point: Optional[PlanePoint] = None
    target: Optional[NumChern] = None
    second_point: Optional[PlanePoint] = None
    classes: Tuple[NumChern, ...] = field(default_factory=tuple)

    def resolved_window(self) -> Window:
        return self.window if self.window is not None else DEFAULT_WINDOWS[self.kind]


def default_spec(kind: str, **overrides) -> FigureSpec:
    """Spec with the built-in defaults for ``kind``.

    The wall picture uses ``(epsilon, delta) = (1/10, 1/160)`` with a target
    whose reduced point is ``(3, 4)``, plus the point ``(-1/10, 1/160)``.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown figure kind {kind!r}")
    base = {}
    if kind == "wall":
        base = dict(
            point=PlanePoint("1/10", "1/160"),
            target=NumChern(1, 3, 4),
            second_point=PlanePoint("-1/10", "1/160"),
        )
    elif kind == "slope_compare":
        base = dict(
            point=PlanePoint(0, "1/4"),
            classes=(NumChern(1, 1, "1/4"), NumChern(1, -1, 0)),
        )
    base.update(overrides)
    return FigureSpec(kind, **base)


# --------------------------------------------------------------------------
# Coordinates


def _num(x: float) -> str:
    text = f"{x:.9f}"
    return "0.000000000" if text == "-0.000000000" else text


class _Viewport:
    def __init__(self, win: Window, width: int, height: int):
        if win.s1 <= win.s0 or win.q1 <= win.q0 or width <= 0 or height <= 0:
            raise EmptyWindow("figure window is empty")
        self.win, self.w, self.h = win, width, height

    def px(self, s: Exact) -> float:
        return float((s - self.win.s0) * Fraction(self.w, 1) / (self.win.s1 - self.win.s0))

    def py(self, q: Exact) -> float:
        return float((-q + self.win.q1) * Fraction(self.h, 1) / (self.win.q1 - self.win.q0))

    def xy(self, s: Exact, q: Exact) -> str:
        return f"{_num(self.px(s))},{_num(self.py(q))}"

    def s_back(self, px: float) -> float:
        w = self.win
        return float(w.s0) + px * float(w.s1 - w.s0) / self.w

    def q_back(self, py: float) -> float:
        w = self.win
        return float(w.q1) - py * float(w.q1 - w.q0) / self.h


def viewport_inverse(spec: FigureSpec, cx: float, cy: float) -> Tuple[float, float]:
    vp = _Viewport(spec.resolved_window(), spec.width_px, spec.height_px)
    return (vp.s_back(cx), vp.q_back(cy))


def _samples(a: Exact, b: Exact) -> List[Exact]:
    """Fixed-density abscissas from ``a`` to ``b`` (both included)."""
    n = max(2, math.ceil(float(b - a) * SAMPLES_PER_UNIT) + 1)
    step = (b - a) * Fraction(1, n - 1)
    return [a + step * i for i in range(n)]


# --------------------------------------------------------------------------
# Building blocks


@dataclass(frozen=True)
class Anchor:
    ident: str
    label: str
    s: Exact
    q: Exact


class _Canvas:
    def __init__(self, spec: FigureSpec):
        self.spec = spec
        self.vp = _Viewport(spec.resolved_window(), spec.width_px, spec.height_px)
        self.items: List[str] = []
        self.anchors: List[Anchor] = []

    def polyline(self, pts, cls: str, color: str, width: str = "1.5", dash: bool = False):
        coords = " ".join(self.vp.xy(s, q) for s, q in pts)
        extra = ' stroke-dasharray="6,4"' if dash else ""
        self.items.append(
            f'<polyline class="{cls}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"{extra} points="{coords}"/>'
        )

    def curve(self, fn, a: Exact, b: Exact, cls: str, color: str, **kw):
        self.polyline([(s, fn(s)) for s in _samples(a, b)], cls, color, **kw)

    def segment(self, p: Tuple[Exact, Exact], r: Tuple[Exact, Exact], cls: str, color: str):
        self.polyline([p, r], cls, color)

    def anchor(self, ident: str, label: str, s: Exact, q: Exact):
        self.anchors.append(Anchor(ident, label, s, q))

    def render(self) -> str:
        w, h = self.spec.width_px, self.spec.height_px
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}" data-kind="{self.spec.kind}">',
            f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        ]
        out.extend(self._axes())
        out.extend(self.items)
        for a in self.anchors:
            cx, cy = _num(self.vp.px(a.s)), _num(self.vp.py(a.q))
            out.append(
                f'<circle class="anchor" id="{a.ident}" cx="{cx}" cy="{cy}" r="3" fill="black"/>'
            )
            out.append(
                f'<text x="{_num(self.vp.px(a.s) + 5)}" y="{_num(self.vp.py(a.q) - 5)}" '
                f'font-family="sans-serif" font-size="12">{a.label}</text>'
            )
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def _axes(self) -> List[str]:
        win, vp = self.vp.win, self.vp
        out = []
        if win.q0 <= 0 <= win.q1:
            y = _num(vp.py(Fraction(0)))
            out.append(
                f'<line class="axis" x1="0.000000000" y1="{y}" '
                f'x2="{_num(float(self.spec.width_px))}" y2="{y}" stroke="#cccccc"/>'
            )
        if win.s0 <= 0 <= win.s1:
            x = _num(vp.px(Fraction(0)))
            out.append(
                f'<line class="axis" x1="{x}" y1="0.000000000" '
                f'x2="{x}" y2="{_num(float(self.spec.height_px))}" stroke="#cccccc"/>'
            )
        return out


def _parabola(s: Exact) -> Exact:
    return s * s * Fraction(1, 2)


def _lower(var: VarietyParams):
    c = Fraction(3, 4 * var.degree)
    return lambda s: s * s * Fraction(1, 2) - c


def _li_boundary(cv: _Canvas, var: VarietyParams, a: Exact, b: Exact, cls: str, color: str):
    """Li's boundary between ``a`` and ``b`` as alternating tangent and parabola pieces."""
    lower = _lower(var)
    pieces: List[Tuple[Exact, Exact, object]] = []
    k_lo = math.floor(float(a)) - 1
    k_hi = math.ceil(float(b)) + 1
    for k in range(k_lo, k_hi + 1):
        left, right = li_tangency_points(k, var)
        tangent = (lambda kk: (lambda s: s * kk - Fraction(kk * kk, 2)))(k)
        pieces.append((left, right, tangent))
        nxt_left, _ = li_tangency_points(k + 1, var)
        pieces.append((right, nxt_left, lower))
    pts: List[Tuple[Exact, Exact]] = []
    for lo, hi, fn in pieces:
        lo2 = lo if lo > a else a
        hi2 = hi if hi < b else b
        if lo2 >= hi2:
            continue
        if fn is lower:
            seg = _samples(lo2, hi2)
        else:
            seg = [lo2, hi2]
        new = [(s, fn(s)) for s in seg]
        if pts and pts[-1][0] == new[0][0]:
            new = new[1:]
        pts.extend(new)
    cv.polyline(pts, cls, color)


def _mark_line_bundles(cv: _Canvas, var: VarietyParams):
    win = cv.vp.win
    for k in range(math.ceil(win.s0), math.floor(win.s1) + 1):
        v = catalog(var, f"O({k})")
        p = reduced_point(v)
        if win.q0 <= p.q <= win.q1:
            cv.anchor(f"O{k}".replace("-", "m"), "O" if k == 0 else f"O({k})", p.s, p.q)


def _draw_li_boundary(cv: _Canvas, var: VarietyParams):
    win = cv.vp.win
    cv.curve(_parabola, win.s0, win.s1, "parabola", GREY)
    cv.curve(_lower(var), win.s0, win.s1, "lower-parabola", GREY, dash=True)
    _li_boundary(cv, var, win.s0, win.s1, "li-boundary", RED)
    _mark_line_bundles(cv, var)
    for k in range(math.ceil(win.s0), math.floor(win.s1) + 1):
        for side, s in zip(("l", "r"), li_tangency_points(k, var)):
            if win.s0 <= s <= win.s1:
                ident = f"T{k}{side}".replace("-", "m")
                cv.anchor(ident, "", s, s * k - Fraction(k * k, 2))


def _draw_regions(cv: _Canvas, var: VarietyParams):
    win = cv.vp.win
    cv.curve(_parabola, win.s0, win.s1, "parabola", GREY)
    _li_boundary(cv, var, win.s0, win.s1, "li-boundary", GREY)
    for r in (1, 2, 3):
        a, b = region_endpoints(r, var)
        m, c = region_line(r, var)
        cv.segment((a.s, a.q), (b.s, b.q), f"region-{r}", RED)
        _li_boundary(cv, var, a.s, b.s, f"region-{r}", RED)
    _mark_line_bundles(cv, var)
    u_name, ud_name = ("U", "Udual") if var.is_gm else ("E2", "E2dual")
    for name, ident in ((u_name, "U"), (ud_name, "Udual")):
        p = reduced_point(catalog(var, name))
        label = {"Udual": "U^v", "E2dual": "E2^v"}.get(name, name)
        cv.anchor(ident, label, p.s, p.q)


def _draw_wall(cv: _Canvas, var: VarietyParams):
    spec, win = cv.spec, cv.vp.win
    p, v = spec.point, spec.target
    cv.curve(_parabola, win.s0, win.s1, "parabola", GREY)
    w = wall_endpoints(p, v)
    bm, bp = (w.b_minus, w.q_of(w.b_minus)), (w.b_plus, w.q_of(w.b_plus))
    cv.segment(bp, bm, "wall", BLUE)
    cv.anchor("P", "(s,q)", p.s, p.q)
    cv.anchor("Bminus", "B-", *bm)
    cv.anchor("Bplus", "B+", *bp)
    target = reduced_point(v)
    if isinstance(target, PlanePoint):
        cv.anchor("B", "B", target.s, target.q)
    if spec.second_point is not None:
        p2 = spec.second_point
        cv.segment((p2.s, p2.q), bm, "slope-bminus", RED)
        o = reduced_point(catalog(var, "O"))
        cv.segment((p2.s, p2.q), (o.s, o.q), "slope-O", BLUE)
        cv.anchor("P2", "(s',q')", p2.s, p2.q)
        cv.anchor("O", "O", o.s, o.q)


def _draw_slope_compare(cv: _Canvas, var: VarietyParams):
    spec, win = cv.spec, cv.vp.win
    p = spec.point
    cv.curve(_parabola, win.s0, win.s1, "parabola", GREY)
    cv.anchor("P", "(s,q)", p.s, p.q)
    colors = (BLUE, RED)
    for i, v in enumerate(spec.classes):
        t = reduced_point(v)
        if isinstance(t, Direction):
            continue
        cv.segment((p.s, p.q), (t.s, t.q), f"slope-{i}", colors[i % 2])
        cv.anchor(f"E{i}", f"E{i}", t.s, t.q)


_DRAW = {
    "li_boundary": _draw_li_boundary,
    "regions": _draw_regions,
    "wall": _draw_wall,
    "slope_compare": _draw_slope_compare,
}


def _canvas(spec: FigureSpec, var: VarietyParams) -> _Canvas:
    if spec.kind not in _DRAW:
        raise ValueError(f"unknown figure kind {spec.kind!r}")
    cv = _Canvas(spec)
    _DRAW[spec.kind](cv, var)
    return cv


def render(spec: FigureSpec, var: VarietyParams) -> str:
    return _canvas(spec, var).render()


def anchors(spec: FigureSpec, var: VarietyParams) -> List[Anchor]:
    """The exact positions of every marked point of the figure."""
    return list(_canvas(spec, var).anchors)
