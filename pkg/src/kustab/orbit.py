"""Matrix part of the GL+(2, R) action relating central charges.

For charges ``zA`` on one lattice and ``zB`` on another, linked by a lattice
map with matrix ``phi`` (A-coordinates to B-coordinates), the transform is
the unique ``M`` with ``M zA = zB phi``.  Only this matrix is modelled; the
lift to the universal cover (and hence any heart-level statement) is not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .charge import ChargeMatrix, ChargeSpec, charge_matrix
from .chern import PlanePoint, twist
from .errors import NotOrientationPreserving, OutsideRegion, SingularCharge
from .exact import Mat2, fmt
from .kulattice import (
    KuLattice,
    basis_classes,
    lattice_coords,
    mutate_O,
    mutate_U,
    serre_matrix,
)
from .tiltplane import StabilityParam, mu_in_window, mu_window, require_region
from .variety import VarietyParams

COVER_NOTE = (
    "only the matrix part M of the GL+(2,R)-cover element is certified; "
    "the phase function and heart-level equality are not modelled"
)


@dataclass(frozen=True)
class GLPlusTransform:
    m: Mat2

    def __post_init__(self):
        if self.m.det() <= 0:
            raise NotOrientationPreserving(
                f"transform has determinant {fmt(self.m.det())} <= 0"
            )

    @property
    def det(self) -> Fraction:
        return self.m.det()

    def __matmul__(self, other: "GLPlusTransform") -> "GLPlusTransform":
        return GLPlusTransform(self.m @ other.m)

    def to_json(self):
        return {"matrix": self.m.to_json(), "det": fmt(self.det)}


def solve_gl(zA: ChargeMatrix, zB: ChargeMatrix, phi: Mat2 | None = None) -> GLPlusTransform:
    """``M = zB phi zA^{-1}``, required to have positive determinant."""
    if zA.det() == 0:
        raise SingularCharge("source charge matrix is singular")
    phi = Mat2.identity() if phi is None else phi
    return GLPlusTransform(zB.m @ phi @ zA.m.inverse())


# --------------------------------------------------------------------------


_TAGS = {1: "b", 2: "c", 3: "d"}


def _charge_for(param: StabilityParam, basis, tag: str, var: VarietyParams) -> ChargeMatrix:
    spec = ChargeSpec.sq(param.point.s, param.point.q, rotation_mu=param.mu)
    return charge_matrix(spec, basis, var, tag)


def check_param(param: StabilityParam, r: int, var: VarietyParams, what: str = "point") -> None:
    """Region membership plus, when ``mu`` is set, the window condition."""
    require_region(param.point, r, var, what)
    if param.mu is not None:
        window = mu_window(param.point, r, var)
        if not mu_in_window(param.mu, window):
            raise OutsideRegion(
                f"{what}: mu = {fmt(param.mu)} outside the window of region {r}"
            )


def region_charge(param: StabilityParam, r: int, var: VarietyParams) -> ChargeMatrix:
    return _charge_for(param, basis_classes(r, var), _TAGS[r], var)


def same_orbit_check(
    pA: StabilityParam, pB: StabilityParam, r: int, var: VarietyParams
) -> GLPlusTransform:
    check_param(pA, r, var, "first point")
    check_param(pB, r, var, "second point")
    return solve_gl(region_charge(pA, r, var), region_charge(pB, r, var))


def induced_matrix(fn, src: KuLattice, dst: KuLattice) -> Mat2:
    """Matrix of a numerical map from ``src`` coordinates to ``dst`` coordinates."""
    cols = [lattice_coords(fn(v), dst) for v in src.basis]
    return Mat2.from_columns(*cols)


def twisted_param(param: StabilityParam) -> StabilityParam:
    """Image of ``(s, q, mu)`` under ``- (x) O(H)``: ``(s+1, q+s+1/2, mu+1)``."""
    s, q = param.point
    mu = None if param.mu is None else param.mu + 1
    return StabilityParam(PlanePoint(s + 1, q + s + Fraction(1, 2)), mu)


@dataclass
class SerreCertificate:
    steps: List[Tuple[str, GLPlusTransform]]
    composite: GLPlusTransform
    lattice_map: Mat2
    serre_matrix: Mat2
    lattice_fixed: bool
    composite_consistent: bool
    note: str = COVER_NOTE
    points: dict = field(default_factory=dict)

    @property
    def passes(self) -> bool:
        return (
            self.lattice_fixed
            and self.composite_consistent
            and all(t.det > 0 for _, t in self.steps)
        )

    def to_json(self):
        return {
            "passes": self.passes,
            "steps": [{"step": name, **t.to_json()} for name, t in self.steps],
            "composite": self.composite.to_json(),
            "lattice_map": self.lattice_map.to_json(),
            "serre_matrix": self.serre_matrix.to_json(),
            "lattice_fixed": self.lattice_fixed,
            "composite_consistent": self.composite_consistent,
            "points": self.points,
            "note": self.note,
        }


def serre_certificate(
    p3: StabilityParam, p2: StabilityParam, p1: StabilityParam, var: VarietyParams
) -> SerreCertificate:
    """Numerical shadow of Serre invariance for ``Ku_3``.

    Steps: ``L_O`` (region 3 to 2), ``L_U`` (2 to 1), twist by ``O(H)`` (1 to
    3), then the closure relating the twisted point back to ``p3``.
    """
    check_param(p3, 3, var, "p3")
    check_param(p2, 2, var, "p2")
    check_param(p1, 1, var, "p1")
    L1, L2, L3 = (KuLattice(i, basis_classes(i, var)) for i in (1, 2, 3))

    phi_o = induced_matrix(lambda v: mutate_O(v, var), L3, L2)
    phi_u = induced_matrix(lambda v: mutate_U(v, var), L2, L1)
    phi_t = induced_matrix(lambda v: twist(v, 1), L1, L3)

    z3 = region_charge(p3, 3, var)
    z2 = region_charge(p2, 2, var)
    z1 = region_charge(p1, 1, var)
    p1t = twisted_param(p1)
    try:
        check_param(p1t, 3, var, "twisted p1")
    except OutsideRegion as exc:  # cannot happen: the twist preserves Li's region
        raise OutsideRegion(f"closure step: {exc}") from exc
    z1t = region_charge(p1t, 3, var)

    steps = [
        ("L_O: Ku_3 -> Ku_2", solve_gl(z3, z2, phi_o)),
        ("L_U: Ku_2 -> Ku_1", solve_gl(z2, z1, phi_u)),
        ("twist by O(H): Ku_1 -> Ku_3", solve_gl(z1, z1t, phi_t)),
        ("closure: same orbit in region 3", solve_gl(z1t, z3)),
    ]
    composite = steps[0][1]
    for _, t in steps[1:]:
        composite = t @ composite
    lattice_map = phi_t @ phi_u @ phi_o
    consistent = composite.m @ z3.m == z3.m @ lattice_map
    smat = serre_matrix(var)
    points = {
        "p3": p3.point.to_json(),
        "p2": p2.point.to_json(),
        "p1": p1.point.to_json(),
        "p1_twisted": p1t.point.to_json(),
    }
    return SerreCertificate(
        steps=steps,
        composite=composite,
        lattice_map=lattice_map,
        serre_matrix=smat,
        lattice_fixed=smat == Mat2.identity(),
        composite_consistent=consistent,
        points=points,
    )
