"""Exact numerics for Serre-invariant stability conditions on Kuznetsov components.

The package works with numerical Chern characters on an index-one Fano
threefold of even genus (genus 6 is the Gushel-Mukai case), tilt-stability
geometry in the (s, q) plane, central charges, the rank-two lattices of the
Kuznetsov components and the GL+(2, R) linear algebra relating charges.
"""

from .charge import ChargeSpec, central_charge, charge_matrix
from .chern import NumChern, PlanePoint, curve_ideal_class, euler, twist
from .errors import DomainError
from .kulattice import basis_classes, ku_basis, mutate_O, mutate_U
from .orbit import serre_certificate, solve_gl
from .tiltplane import StabilityParam, region_test
from .variety import GM, make_variety

__all__ = [
    "ChargeSpec",
    "DomainError",
    "GM",
    "NumChern",
    "PlanePoint",
    "StabilityParam",
    "basis_classes",
    "central_charge",
    "charge_matrix",
    "curve_ideal_class",
    "euler",
    "ku_basis",
    "make_variety",
    "mutate_O",
    "mutate_U",
    "region_test",
    "serre_certificate",
    "solve_gl",
    "twist",
]
__version__ = "0.1.0"
