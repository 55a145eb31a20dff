from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kustab.charge import (
    ChargeSpec,
    bogomolov_gieseker,
    central_charge,
    charge_matrix,
    orientation,
)
from kustab.chern import NumChern
from kustab.errors import NonPositiveAlphaSq
from kustab.exact import GaussRational, Mat2
from kustab.kulattice import basis_classes
from kustab.variety import GM, catalog

F = Fraction
B = basis_classes(1, GM)
C = basis_classes(2, GM)
D = basis_classes(3, GM)

q_st = st.fractions(min_value=-2, max_value=2, max_denominator=200)
mu_st = st.fractions(min_value=-20, max_value=20, max_denominator=50)
small = st.fractions(min_value=-10, max_value=10, max_denominator=30)
classes = st.builds(NumChern, small, small, small, small)


@given(q_st, q_st)
def test_sq_charge_on_b_basis(s, q):
    spec = ChargeSpec.sq(s, q)
    assert central_charge(spec, B[0], GM) == GaussRational(10 * (q + F(3, 10)), -10 * s)
    assert central_charge(spec, B[1], GM) == GaussRational(6, 10)


def test_sq_matrix_at_u_point():
    cm = charge_matrix(ChargeSpec.sq(F(-1, 2), F(1, 20)), B, GM, "b")
    assert cm.m == Mat2.from_rows([[10 * (F(1, 20) + F(3, 10)), 6], [5, 10]])


@given(q_st, q_st)
def test_b_orientation_determinant(s, q):
    cm = charge_matrix(ChargeSpec.sq(s, q), B, GM)
    assert cm.det() == 100 * (q + F(3, 5) * s + F(3, 10))


def _z_alpha_eps(beta, alpha_sq):
    # the charge -i Z_{alpha,beta}: rotation by mu = 0
    return ChargeSpec.ab(beta, alpha_sq, rotation_mu=0)


eps_st = st.fractions(min_value=F(1, 1000), max_value=F(1, 10), max_denominator=1000)
frac_st = st.fractions(min_value=F(1, 100), max_value=F(99, 100), max_denominator=100)


@given(eps_st, frac_st)
def test_small_alpha_charges_on_d_and_c(eps, t):
    a2 = eps * eps * t
    zd = [central_charge(_z_alpha_eps(eps, a2), v, GM) for v in D]
    assert zd[0] == GaussRational(10 * (1 - eps), 10 * (F(1, 5) - eps + eps**2 / 2 - a2 / 2))
    assert zd[1] == GaussRational(10, 10 * (F(2, 5) - eps))
    zc = [central_charge(_z_alpha_eps(-eps, a2), v, GM) for v in C]
    assert zc[0] == GaussRational(
        10 * (1 - 3 * eps), 10 * (F(1, 5) + eps - F(3, 2) * eps**2 + F(3, 2) * a2)
    )
    assert zc[1] == GaussRational(
        10 * (1 - 4 * eps), 10 * (F(2, 5) + eps - 2 * eps**2 + 2 * a2)
    )


@given(eps_st, frac_st)
def test_small_alpha_determinants(eps, t):
    a2 = eps * eps * t
    det_d = charge_matrix(_z_alpha_eps(eps, a2), D, GM).det()
    det_c = charge_matrix(_z_alpha_eps(-eps, a2), C, GM).det()
    expected = lambda e: 100 * (a2 / 2 + e**2 / 2 - F(2, 5) * e + F(1, 5))
    assert det_d == expected(eps)
    # with beta = -eps the c-basis determinant reads the same in eps' = eps
    assert det_c == expected(eps)
    assert det_d > 0 and det_c > 0


def test_rotated_charge_of_u_shift():
    # Im of conj(u) Z(U[2]) with mu = -1/10 at s = -1/2 + eps
    eps = F(1, 100)
    for q in (F(1, 25), F(49, 1000), F(1, 20) - eps / 10):
        spec = ChargeSpec.sq(F(-1, 2) + eps, q, rotation_mu=F(-1, 10))
        z = central_charge(spec, catalog(GM, "U"), GM)
        assert z.im == 1 - 20 * q - 2 * eps
    q0 = (1 - 2 * eps) / 20
    spec = ChargeSpec.sq(F(-1, 2) + eps, q0, rotation_mu=F(-1, 10))
    assert central_charge(spec, catalog(GM, "U"), GM).im == 0


@given(q_st, q_st, mu_st, st.sampled_from([1, 2, 3]))
def test_rotation_preserves_orientation(s, q, mu, i):
    basis = basis_classes(i, GM)
    plain = charge_matrix(ChargeSpec.sq(s, q), basis, GM)
    rot = charge_matrix(ChargeSpec.sq(s, q, rotation_mu=mu), basis, GM)
    assert orientation(plain) == orientation(rot)
    assert rot.det() == plain.det() * (mu * mu + 1)


@given(classes, q_st, st.fractions(min_value=F(1, 100), max_value=3, max_denominator=100))
def test_ab_sq_shear_identity(v, beta, alpha_sq):
    za = central_charge(ChargeSpec.ab(beta, alpha_sq), v, GM)
    q = (alpha_sq + beta * beta) / 2
    zs = central_charge(ChargeSpec.sq(beta, q), v, GM)
    assert za.im == zs.im
    assert za.re == zs.re + beta * zs.im


@given(classes, classes, q_st, q_st)
def test_charge_additive(v, w, s, q):
    spec = ChargeSpec.sq(s, q)
    assert central_charge(spec, v + w, GM) == central_charge(spec, v, GM) + central_charge(spec, w, GM)


def test_swapped_columns_flip_orientation():
    spec = ChargeSpec.sq(F(-7, 10), F(9, 40))
    assert orientation(charge_matrix(spec, B, GM)) == 1
    assert orientation(charge_matrix(spec, (B[1], B[0]), GM)) == -1


def test_ab_requires_positive_alpha():
    with pytest.raises(NonPositiveAlphaSq):
        ChargeSpec.ab(0, 0)


def test_bogomolov_gieseker():
    assert bogomolov_gieseker(catalog(GM, "O(3)"), GM) == 0
    assert bogomolov_gieseker(catalog(GM, "U"), GM) == 100 - 40
