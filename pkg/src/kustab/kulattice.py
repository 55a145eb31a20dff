"""Rank-two numerical lattices of the three Kuznetsov components.

``Ku_1`` has basis ``(b1, b2)``; ``Ku_3 = Ku_1(H)`` has the twisted basis
``(d1, d2)``; ``Ku_2 = L_O(Ku_3)`` has ``(c1, c2) = (L_O d1, L_O d2)``.
Mutations act on numerical classes by ``v -> v - chi(E, v) [E]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .chern import NumChern, curve_ideal_class, euler, twist
from .errors import MissingCh3, NotInLattice, SingularMatrix, UnsupportedGenus
from .exact import Mat2, fmt, solve2x2
from .variety import VarietyParams, catalog


@dataclass(frozen=True)
class KuLattice:
    index: int
    basis: Tuple[NumChern, NumChern]
    gram: Optional[Mat2] = None

    @property
    def tag(self) -> str:
        return {1: "b", 2: "c", 3: "d"}[self.index]

    def element(self, a, b) -> NumChern:
        return self.basis[0] * a + self.basis[1] * b


def b_basis(var: VarietyParams) -> Tuple[NumChern, NumChern]:
    d = var.degree
    t1, t2 = var.b_ch3
    return (
        NumChern(1, 0, -Fraction(d + 2, 4 * d), t1),
        NumChern(0, 1, -Fraction(3 * d - 6, 4 * d), t2),
    )


def rank2_object(var: VarietyParams) -> NumChern:
    """``U`` for genus 6, ``E2`` otherwise."""
    return catalog(var, "U" if var.is_gm else "E2")


def mutate_O(v: NumChern, var: VarietyParams) -> NumChern:
    O = catalog(var, "O")
    return v - O * euler(O, v, var)


def mutate_U(v: NumChern, var: VarietyParams) -> NumChern:
    E = rank2_object(var)
    if E.ch3 is None:
        raise MissingCh3(f"ch3 of the rank-2 bundle is unset for genus {var.genus}")
    return v - E * euler(E, v, var)


def basis_classes(i: int, var: VarietyParams) -> Tuple[NumChern, NumChern]:
    """Basis of ``N(Ku_i)``; ch3 may be unset when ch3 tails are unknown."""
    b = b_basis(var)
    if i == 1:
        return b
    d = (twist(b[0], 1), twist(b[1], 1))
    if i == 3:
        return d
    if i == 2:
        return (mutate_O(d[0], var), mutate_O(d[1], var))
    raise ValueError(f"lattice index must be 1, 2 or 3, got {i!r}")


def gram_matrix(basis, var: VarietyParams) -> Mat2:
    (x, y) = basis
    return Mat2(euler(x, x, var), euler(x, y, var), euler(y, x, var), euler(y, y, var))


def ku_basis(i: int, var: VarietyParams) -> KuLattice:
    basis = basis_classes(i, var)
    for v in basis:
        v.require_ch3()
    return KuLattice(i, basis, gram_matrix(basis, var))


def lattice_coords(v: NumChern, L: KuLattice) -> Tuple[Fraction, Fraction]:
    """Coordinates of ``v`` in the basis of ``L``; NotInLattice if outside its span.

    All four components are compared (ch3 only when known on both sides).
    """
    x, y = L.basis
    rows = list(zip(x.components[:3], y.components[:3], v.components[:3]))
    coords = None
    for i in range(3):
        for j in range(i + 1, 3):
            m = Mat2(rows[i][0], rows[i][1], rows[j][0], rows[j][1])
            try:
                coords = solve2x2(m, (rows[i][2], rows[j][2]))
            except SingularMatrix:
                continue
            break
        if coords is not None:
            break
    if coords is None:
        raise NotInLattice("lattice basis is degenerate")
    a, b = coords
    w = L.element(a, b)
    same = w.truncated == v.truncated
    if same and w.ch3 is not None and v.ch3 is not None:
        same = w.ch3 == v.ch3
    if not same:
        raise NotInLattice(f"class {v} is not in the span of N(Ku_{L.index})")
    return (a, b)


def is_integral(coords) -> bool:
    return all(Fraction(c).denominator == 1 for c in coords)


def serre_inverse_numeric(v: NumChern, var: VarietyParams) -> NumChern:
    """Action of the inverse Serre functor of ``Ku_3`` on numerical classes.

    ``S^{-1} = (- (x) O(H)) o L_U o L_O [-3]``; the shift contributes a sign.
    """
    L3 = KuLattice(3, basis_classes(3, var))
    lattice_coords(v, L3)
    out = -twist(mutate_U(mutate_O(v, var), var), 1)
    lattice_coords(out, L3)
    return out


def serre_matrix(var: VarietyParams) -> Mat2:
    """Matrix of ``serre_inverse_numeric`` in the ``(d1, d2)`` basis."""
    L3 = KuLattice(3, basis_classes(3, var))
    cols = [lattice_coords(serre_inverse_numeric(x, var), L3) for x in L3.basis]
    return Mat2.from_columns(*cols)


def quadratic_form(L: KuLattice, a, b) -> Fraction:
    g = L.gram
    return g.a * a * a + (g.b + g.c) * a * b + g.d * b * b


@dataclass(frozen=True)
class EllScan:
    value: Fraction
    witnesses: List[Tuple[int, int]] = field(default_factory=list)


def ell_scan(L: KuLattice, radius: int) -> EllScan:
    """Maximum of ``chi(v, v)`` over nonzero integer vectors in the box."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    best = None
    witnesses: List[Tuple[int, int]] = []
    rng = range(-radius, radius + 1)
    for a in rng:
        for b in rng:
            if a == 0 and b == 0:
                continue
            val = quadratic_form(L, a, b)
            if best is None or val > best:
                best, witnesses = val, [(a, b)]
            elif val == best:
                witnesses.append((a, b))
    return EllScan(best, witnesses)


def ell_max(L: KuLattice, radius: int) -> Fraction:
    return ell_scan(L, radius).value


# --------------------------------------------------------------------------
# Named classes


def conic_class(var: VarietyParams) -> NumChern:
    return curve_ideal_class(2, 0, var)


def twisted_cubic_class(var: VarietyParams) -> NumChern:
    return curve_ideal_class(3, 0, var)


def q1_class(var: VarietyParams) -> NumChern:
    """Class of ``L_U(I_C)`` for a conic ``C``."""
    return mutate_U(conic_class(var), var)


_CURVES = {"line": 1, "conic": 2, "cubic": 3}
_BASIS = re.compile(r"^([bcd])([12])$")


def named_class(name: str, var: VarietyParams) -> NumChern:
    """Resolve ``b1``, ``d2``, ``U``, ``O(2)``, ``conic``, ``Q1`` and so on."""
    name = name.lstrip("@")
    m = _BASIS.match(name)
    if m:
        i = {"b": 1, "c": 2, "d": 3}[m.group(1)]
        return basis_classes(i, var)[int(m.group(2)) - 1]
    if name in _CURVES:
        return curve_ideal_class(_CURVES[name], 0, var)
    if name == "Q1":
        return q1_class(var)
    if name in ("Q2", "Q2'"):
        return twisted_cubic_class(var)
    return catalog(var, name)


# --------------------------------------------------------------------------
# chi-shadow of the uniqueness criterion


@dataclass(frozen=True)
class ChiEntry:
    label: str
    value: object
    expected: object
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.value == self.expected

    def to_json(self):
        def enc(x):
            if isinstance(x, tuple):
                return [fmt(c) for c in x]
            return fmt(x)

        return {
            "label": self.label,
            "value": enc(self.value),
            "expected": enc(self.expected),
            "ok": self.ok,
            "note": self.note,
        }


def chi_consistency_report(var: VarietyParams) -> List[ChiEntry]:
    if not var.is_gm:
        raise UnsupportedGenus("the chi-consistency report is only defined for genus 6")
    L1 = ku_basis(1, var)
    O, U = catalog(var, "O"), catalog(var, "U")
    q1, q2 = q1_class(var), twisted_cubic_class(var)
    return [
        ChiEntry("[Q2] in b-basis", lattice_coords(q2, L1), (Fraction(1), Fraction(0))),
        ChiEntry("[Q1] in b-basis", lattice_coords(q1, L1), (Fraction(-1), Fraction(1))),
        ChiEntry("chi(O, Q2)", euler(O, q2, var), Fraction(0), "I_D is numerically in Ku"),
        ChiEntry("chi(U, Q2)", euler(U, q2, var), Fraction(0), "I_D is numerically in Ku"),
        ChiEntry("chi(Q1, Q1)", euler(q1, q1, var), Fraction(-1), "hom0 = 1, hom1 = 2"),
        ChiEntry("chi(Q2, Q2)", euler(q2, q2, var), Fraction(-2), "hom0 = 1, hom1 = 3"),
        ChiEntry("chi(Q2', Q2')", euler(q2, q2, var), Fraction(-2), "hom0 = 1, hom1 = 3"),
    ]


def report_passes(entries) -> bool:
    return all(e.ok for e in entries)


def describe_lattice(L: KuLattice) -> Dict[str, object]:
    out: Dict[str, object] = {
        "index": L.index,
        "basis": [v.to_json() for v in L.basis],
    }
    if L.gram is not None:
        out["gram"] = L.gram.to_json()
    return out
