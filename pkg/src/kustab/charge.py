"""Central charges as exact linear maps on numerical classes.

Two parametrizations are supported:

* ``sq``: ``Z_{s,q}(v) = -d (ch2 - q rk) + i d (c1 - s rk)``;
* ``ab``: ``Z_{alpha,beta}(v) = (alpha^2/2) d rk - d ch2^beta + i d ch1^beta``.

With ``s = beta`` and ``q = (alpha^2 + beta^2)/2`` the two are related by
the real shear ``Z_ab = Z_sq + beta * Im Z_sq`` (same imaginary part).

A rotation slope ``mu`` multiplies the charge by ``conj(u)`` with
``u = -mu + i``.  This differs from ``Z/u`` by the positive factor ``|u|^2``
and keeps everything rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chern import NumChern, PlanePoint, twisted_char
from .errors import NonPositiveAlphaSq
from .exact import GaussRational, Mat2, as_rational, fmt
from .variety import VarietyParams


@dataclass(frozen=True)
class ChargeSpec:
    kind: str  # "sq" or "ab"
    point: Optional[PlanePoint] = None
    beta: Optional[Fraction] = None
    alpha_sq: Optional[Fraction] = None
    rotation_mu: Optional[Fraction] = None

    @classmethod
    def sq(cls, s, q, rotation_mu=None) -> "ChargeSpec":
        mu = None if rotation_mu is None else as_rational(rotation_mu)
        return cls("sq", point=PlanePoint(s, q), rotation_mu=mu)

    @classmethod
    def ab(cls, beta, alpha_sq, rotation_mu=None) -> "ChargeSpec":
        alpha_sq = as_rational(alpha_sq)
        if alpha_sq <= 0:
            raise NonPositiveAlphaSq("alpha^2 must be positive")
        mu = None if rotation_mu is None else as_rational(rotation_mu)
        return cls("ab", beta=as_rational(beta), alpha_sq=alpha_sq, rotation_mu=mu)

    def rotated(self, mu) -> "ChargeSpec":
        return ChargeSpec(self.kind, self.point, self.beta, self.alpha_sq, as_rational(mu))

    def unrotated(self) -> "ChargeSpec":
        return ChargeSpec(self.kind, self.point, self.beta, self.alpha_sq, None)


def rotation_factor(mu) -> GaussRational:
    """``conj(u)`` for ``u = -mu + i``."""
    return GaussRational(-as_rational(mu), -1)


def central_charge(spec: ChargeSpec, v: NumChern, var: VarietyParams) -> GaussRational:
    d = var.degree
    if spec.kind == "sq":
        s, q = spec.point
        z = GaussRational(-d * (v.ch2 - q * v.rk), d * (v.c1 - s * v.rk))
    elif spec.kind == "ab":
        tw = twisted_char(v, spec.beta)
        z = GaussRational(spec.alpha_sq * d * v.rk / 2 - d * tw.ch2, d * tw.c1)
    else:
        raise ValueError(f"unknown charge kind {spec.kind!r}")
    if spec.rotation_mu is not None:
        z = rotation_factor(spec.rotation_mu) * z
    return z


@dataclass(frozen=True)
class ChargeMatrix:
    """Columns are ``(Re, Im)`` of the charge on an ordered lattice basis."""

    m: Mat2
    basis_tag: str = "custom"

    def det(self) -> Fraction:
        return self.m.det()

    def to_json(self):
        return {"basis": self.basis_tag, "matrix": self.m.to_json(), "det": fmt(self.det())}


def charge_matrix(
    spec: ChargeSpec, basis: Sequence[NumChern], var: VarietyParams, tag: str = "custom"
) -> ChargeMatrix:
    z1, z2 = (central_charge(spec, v, var) for v in basis)
    return ChargeMatrix(Mat2.from_columns(z1.as_pair(), z2.as_pair()), tag)


def orientation(cm: ChargeMatrix) -> int:
    det = cm.det()
    return (det > 0) - (det < 0)


def bogomolov_gieseker(v: NumChern, var: VarietyParams) -> Fraction:
    """``(H^2 ch1)^2 - 2 H^3 ch0 (H ch2)``; non-negative for semistable sheaves."""
    d = var.degree
    return (d * v.c1) ** 2 - 2 * v.rk * d * (d * v.ch2)


def bg_holds(v: NumChern, var: VarietyParams) -> bool:
    return bogomolov_gieseker(v, var) >= 0
