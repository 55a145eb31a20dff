"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction`.  On top of them this module adds
Gaussian rationals (complex numbers with rational parts), 2x2 rational
matrices and quadratic surds ``a + b*sqrt(D)`` over a single square-free
radicand.  Nothing here touches floating point except the explicit
``__float__`` conversions used for display.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import IncompatibleRadicands, SingularMatrix

RationalLike = Union[int, Fraction, str]

__all__ = [
    "Fraction",
    "as_rational",
    "fmt",
    "GaussRational",
    "Mat2",
    "det2",
    "solve2x2",
    "QuadraticSurd",
    "surd_cmp",
    "quadratic_roots",
    "sqrt_rational",
]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose: core computations must stay exact.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fmt(x: Fraction | int) -> str:
    """Serialize a rational as ``"p/q"``, or ``"n"`` when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# --------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class GaussRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @staticmethod
    def _lift(other) -> "GaussRational":
        if isinstance(other, GaussRational):
            return other
        return GaussRational(as_rational(other), Fraction(0))

    def __add__(self, other):
        o = self._lift(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._lift(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussRational(p.re / n, p.im / n)

    def as_pair(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return f"{fmt(self.re)} + ({fmt(self.im)})i"


# --------------------------------------------------------------------------
# 2x2 matrices


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 rational matrix ``[[a, b], [c, d]]``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_columns(cls, col0, col1) -> "Mat2":
        return cls(col0[0], col1[0], col0[1], col1[1])

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, k: RationalLike) -> "Mat2":
        return cls(k, 0, 0, k)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def column(self, j: int) -> Tuple[Fraction, Fraction]:
        return (self.a, self.c) if j == 0 else (self.b, self.d)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2":
        det = self.det()
        if det == 0:
            raise SingularMatrix("matrix has zero determinant")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def apply(self, v) -> Tuple[Fraction, Fraction]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return self.apply(other)

    def __mul__(self, k):
        k = as_rational(k)
        return Mat2(self.a * k, self.b * k, self.c * k, self.d * k)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __add__(self, other: "Mat2"):
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2"):
        return self + (-other)

    def to_json(self):
        return [[fmt(x) for x in row] for row in self.rows()]


def det2(m: Mat2) -> Fraction:
    return m.det()


def solve2x2(m: Mat2, rhs) -> Tuple[Fraction, Fraction]:
    """Solve ``m @ x = rhs`` exactly by Cramer's rule."""
    det = m.det()
    if det == 0:
        raise SingularMatrix("cannot solve: determinant is zero")
    r0, r1 = (as_rational(r) for r in rhs)
    x0 = (r0 * m.d - m.b * r1) / det
    x1 = (m.a * r1 - r0 * m.c) / det
    return (x0, x1)


# --------------------------------------------------------------------------
# Quadratic surds


@functools.lru_cache(maxsize=1024)
def _square_free_split(n: int) -> Tuple[int, int]:
    """Return ``(f, core)`` with ``n == f*f*core`` and ``core`` square-free."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n in (0, 1):
        return (1, n)
    r = math.isqrt(n)
    if r * r == n:
        return (r, 1)
    from sympy import factorint

    f, core = 1, 1
    for p, e in factorint(n).items():
        f *= p ** (e // 2)
        if e % 2:
            core *= p
    return (f, core)


@functools.total_ordering
@dataclass(frozen=True, init=False)
class QuadraticSurd:
    """The real number ``a + b*sqrt(D)`` with ``D`` square-free.

    Rational values are stored as ``(a, 0, 0)``.
    """

    a: Fraction
    b: Fraction
    D: int

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, D: int = 0):
        a, b = as_rational(a), as_rational(b)
        D = int(D)
        f, core = _square_free_split(D)
        b = b * f
        if core == 1:
            a, b, core = a + b, Fraction(0), 0
        if b == 0 or core == 0:
            b, core = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", core)

    @classmethod
    def rational(cls, x: RationalLike) -> "QuadraticSurd":
        return cls(x, 0, 0)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against b^2 D
        return sa * _sign(self.a * self.a - self.b * self.b * self.D)

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            o = other
        else:
            o = QuadraticSurd.rational(as_rational(other))
        if not self.is_rational and not o.is_rational and self.D != o.D:
            raise IncompatibleRadicands(
                f"cannot combine sqrt({self.D}) with sqrt({o.D})"
            )
        return o

    def _radicand(self, o: "QuadraticSurd") -> int:
        return self.D or o.D

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        D = self._radicand(o)
        return QuadraticSurd(
            self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational (division by a surd is not needed)."""
        if isinstance(other, QuadraticSurd):
            if not other.is_rational:
                return NotImplemented
            other = other.a
        k = as_rational(other)
        if k == 0:
            raise ZeroDivisionError("division of a surd by zero")
        return QuadraticSurd(self.a / k, self.b / k, self.D)

    def __eq__(self, other):
        if not isinstance(other, (QuadraticSurd, int, Fraction)):
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        if not isinstance(other, (QuadraticSurd, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __str__(self):
        if self.is_rational:
            return fmt(self.a)
        return f"{fmt(self.a)} + ({fmt(self.b)})*sqrt({self.D})"

    def to_json(self):
        return {"a": fmt(self.a), "b": fmt(self.b), "D": self.D}


def surd_cmp(x: QuadraticSurd, y: QuadraticSurd) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    if not isinstance(x, QuadraticSurd):
        x = QuadraticSurd.rational(x)
    return (x - y).sign()


def sqrt_rational(r: RationalLike) -> QuadraticSurd:
    """``sqrt(r)`` for a non-negative rational ``r`` as a surd."""
    r = as_rational(r)
    if r < 0:
        raise ValueError("square root of a negative rational")
    # sqrt(p/q) = sqrt(p*q)/q
    return QuadraticSurd(0, Fraction(1, r.denominator), r.numerator * r.denominator)


def quadratic_roots(A, B, C) -> Tuple[QuadraticSurd, QuadraticSurd]:
    """Real roots of ``A s^2 + B s + C = 0`` in increasing order.

    Raises ValueError when the discriminant is negative or ``A == 0``.
    """
    A, B, C = as_rational(A), as_rational(B), as_rational(C)
    if A == 0:
        raise ValueError("leading coefficient is zero")
    disc = B * B - 4 * A * C
    if disc < 0:
        raise ValueError("negative discriminant")
    root = sqrt_rational(disc) * Fraction(1, 2 * A)
    centre = -B / (2 * A)
    r1, r2 = root + centre, -root + centre
    return (r1, r2) if r1 <= r2 else (r2, r1)
