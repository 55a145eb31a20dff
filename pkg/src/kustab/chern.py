"""Numerical Chern characters on a Picard-rank-one threefold.

A class is stored in coefficient form: ``ch = rk + c1*H + ch2*H^2 + ch3*H^3``.
The integral of the top term is ``ch3 * d`` with ``d = H^3``.  Some classes
(the genus-g basis vectors, ``E2`` for g != 6) have unknown ch3; it is then
``None`` and every operation that needs it raises :class:`MissingCh3`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import MissingCh3, MissingTodd, ZeroClass
from .exact import as_rational, fmt
from .variety import VarietyParams

__all__ = [
    "NumChern",
    "PlanePoint",
    "Direction",
    "twist",
    "dual",
    "shift",
    "twisted_char",
    "euler",
    "curve_ideal_class",
    "reduced_point",
]


@dataclass(frozen=True)
class PlanePoint:
    """A point ``(s, q)`` of the tilt plane."""

    s: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", as_rational(self.s))
        object.__setattr__(self, "q", as_rational(self.q))

    def to_json(self):
        return [fmt(self.s), fmt(self.q)]

    def __iter__(self):
        yield self.s
        yield self.q


@dataclass(frozen=True)
class Direction:
    """Point at infinity ``[0 : c1 : ch2]`` of a rank-zero class."""

    c1: Fraction
    ch2: Fraction


@dataclass(frozen=True)
class NumChern:
    rk: Fraction
    c1: Fraction
    ch2: Fraction
    ch3: Optional[Fraction] = None

    def __post_init__(self):
        for name in ("rk", "c1", "ch2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.ch3 is not None:
            object.__setattr__(self, "ch3", as_rational(self.ch3))

    # -- vector space structure -------------------------------------------

    def _ch3_op(self, other, op):
        if self.ch3 is None or other.ch3 is None:
            return None
        return op(self.ch3, other.ch3)

    def __add__(self, other: "NumChern") -> "NumChern":
        return NumChern(
            self.rk + other.rk,
            self.c1 + other.c1,
            self.ch2 + other.ch2,
            self._ch3_op(other, lambda a, b: a + b),
        )

    def __neg__(self) -> "NumChern":
        return self * -1

    def __sub__(self, other: "NumChern") -> "NumChern":
        return self + (-other)

    def __mul__(self, k) -> "NumChern":
        k = as_rational(k)
        return NumChern(
            self.rk * k,
            self.c1 * k,
            self.ch2 * k,
            None if self.ch3 is None else self.ch3 * k,
        )

    __rmul__ = __mul__

    @property
    def components(self):
        return (self.rk, self.c1, self.ch2, self.ch3)

    @property
    def truncated(self):
        """``ch_{<=2}`` as a triple."""
        return (self.rk, self.c1, self.ch2)

    def require_ch3(self) -> Fraction:
        if self.ch3 is None:
            raise MissingCh3(f"class {self} has no ch3")
        return self.ch3

    def is_zero(self) -> bool:
        return self.rk == 0 and self.c1 == 0 and self.ch2 == 0 and not self.ch3

    def integrated(self, degree: int):
        """Display form ``(rk, c1, ch2, ch3 * d)`` (last slot is a degree)."""
        last = None if self.ch3 is None else self.ch3 * degree
        return (self.rk, self.c1, self.ch2, last)

    def to_json(self):
        out = {"rk": fmt(self.rk), "c1": fmt(self.c1), "ch2": fmt(self.ch2)}
        if self.ch3 is not None:
            out["ch3"] = fmt(self.ch3)
        return out

    @classmethod
    def from_json(cls, data) -> "NumChern":
        ch3 = data.get("ch3")
        return cls(data["rk"], data["c1"], data["ch2"], None if ch3 is None else ch3)

    def __str__(self):
        tail = "?" if self.ch3 is None else fmt(self.ch3)
        return f"({fmt(self.rk)}, {fmt(self.c1)}, {fmt(self.ch2)}, {tail})"


def _exp_mul(v: NumChern, t: Fraction) -> NumChern:
    # v * e^{tH}, truncated at H^3
    rk, c1, ch2, ch3 = v.components
    new3 = None
    if ch3 is not None:
        new3 = ch3 + t * ch2 + t * t * c1 / 2 + t**3 * rk / 6
    return NumChern(rk, c1 + t * rk, ch2 + t * c1 + t * t * rk / 2, new3)


def twist(v: NumChern, k: int) -> NumChern:
    """``v . e^{kH}``: the class of ``E(kH)``."""
    return _exp_mul(v, as_rational(k))


def twisted_char(v: NumChern, beta) -> NumChern:
    """``ch^beta = e^{-beta H} . ch``."""
    return _exp_mul(v, -as_rational(beta))


def dual(v: NumChern) -> NumChern:
    return NumChern(v.rk, -v.c1, v.ch2, None if v.ch3 is None else -v.ch3)


def shift(v: NumChern, n: int) -> NumChern:
    """K-theory class of ``E[n]``."""
    return v if n % 2 == 0 else -v


def _poly_mul(x, y):
    out = [Fraction(0)] * 4
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            if i + j < 4:
                out[i + j] += a * b
    return out


def euler(v: NumChern, w: NumChern, var: VarietyParams) -> Fraction:
    """Euler pairing ``chi(v, w)`` by Hirzebruch-Riemann-Roch."""
    if not var.todd_complete:
        raise MissingTodd(f"Todd class of genus {var.genus} is not fully known")
    v.require_ch3()
    w.require_ch3()
    prod = _poly_mul(_poly_mul(dual(v).components, w.components), var.todd)
    return prod[3] * var.degree


def curve_ideal_class(e: int, gc: int, var: VarietyParams) -> NumChern:
    """Class of the ideal sheaf of a curve of degree ``e`` and genus ``gc``.

    ch3 of the structure sheaf is pinned by ``chi(O_X, O_C) = 1 - gc``.
    """
    if e <= 0:
        raise ValueError("curve degree must be positive")
    if not var.todd_complete:
        raise MissingTodd(f"Todd class of genus {var.genus} is not fully known")
    d = var.degree
    ch2 = Fraction(e, d)
    # chi(O, O_C) = d * (ch2 * td1 + ch3) for ch(O_C) = (0, 0, ch2, ch3)
    ch3 = (Fraction(1 - gc) / d) - ch2 * var.todd[1]
    return NumChern(1, 0, -ch2, -ch3)


def reduced_point(v: NumChern, var: VarietyParams | None = None) -> Union[PlanePoint, Direction]:
    """Affine point ``(c1/rk, ch2/rk)``; rank-zero classes give a direction."""
    if v.rk == 0 and v.c1 == 0 and v.ch2 == 0:
        raise ZeroClass("reduced character of a class with ch<=2 = 0")
    if v.rk == 0:
        return Direction(v.c1, v.ch2)
    return PlanePoint(v.c1 / v.rk, v.ch2 / v.rk)
