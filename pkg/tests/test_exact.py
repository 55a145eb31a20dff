from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kustab.errors import IncompatibleRadicands, SingularMatrix
from kustab.exact import (
    GaussRational,
    Mat2,
    QuadraticSurd,
    as_rational,
    fmt,
    quadratic_roots,
    solve2x2,
    sqrt_rational,
    surd_cmp,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
nonzero = rationals.filter(lambda x: x != 0)


def test_as_rational_accepts_strings_and_ints():
    assert as_rational("-3/10") == Fraction(-3, 10)
    assert as_rational(4) == Fraction(4)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_fmt():
    assert fmt(Fraction(6, 4)) == "3/2"
    assert fmt(Fraction(-4, 2)) == "-2"
    assert fmt(0) == "0"


def test_gauss_rational_arithmetic():
    z = GaussRational(1, 2)
    w = GaussRational("1/2", -1)
    assert z * w == GaussRational(Fraction(5, 2), 0)
    assert (z / w) * w == z
    assert z.conjugate().im == -2
    assert z.norm2() == 5


def test_mat2_inverse_and_singular():
    m = Mat2.from_rows([[2, 1], [1, 1]])
    assert m @ m.inverse() == Mat2.identity()
    with pytest.raises(SingularMatrix):
        Mat2(1, 2, 2, 4).inverse()
    with pytest.raises(SingularMatrix):
        solve2x2(Mat2(1, 2, 2, 4), (1, 1))


def test_from_columns_layout():
    m = Mat2.from_columns((1, 2), (3, 4))
    assert m.rows() == ((1, 3), (2, 4))
    assert m.column(1) == (3, 4)


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_solve2x2_matches_inverse(a, b, c, d, x, y):
    m = Mat2(a, b, c, d)
    if m.det() == 0:
        return
    assert solve2x2(m, (x, y)) == m.inverse().apply((x, y))


@given(rationals, rationals, rationals, rationals, rationals, rationals, rationals, rationals)
def test_det_multiplicative(a, b, c, d, e, f, g, h):
    m, n = Mat2(a, b, c, d), Mat2(e, f, g, h)
    assert (m @ n).det() == m.det() * n.det()


def test_surd_normalizes_radicand():
    x = QuadraticSurd(0, 1, 12)
    assert (x.b, x.D) == (2, 3)
    assert QuadraticSurd(1, 3, 4) == 7
    assert QuadraticSurd(1, 3, 4).is_rational


def test_surd_incompatible():
    with pytest.raises(IncompatibleRadicands):
        QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3)


def test_surd_sign_cases():
    assert QuadraticSurd(-3, 1, 10).sign() == 1
    assert QuadraticSurd(-4, 1, 10).sign() == -1
    assert QuadraticSurd(3, -1, 10).sign() == -1
    assert QuadraticSurd(0, 0, 5).sign() == 0
    assert surd_cmp(QuadraticSurd(0, 1, 2), Fraction(3, 2)) == -1


@given(rationals, rationals, st.integers(min_value=2, max_value=200))
def test_surd_sign_matches_float(a, b, D):
    x = QuadraticSurd(a, b, D)
    f = float(a) + float(b) * math.sqrt(D)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@given(rationals, rationals, rationals, rationals, st.sampled_from([2, 3, 5, 15, 1217]))
def test_surd_field_operations(a, b, c, d, D):
    x, y = QuadraticSurd(a, b, D), QuadraticSurd(c, d, D)
    assert (x + y) - y == x
    assert float(x * y) == pytest.approx(float(x) * float(y), rel=1e-9, abs=1e-9)


def test_sqrt_rational():
    r = sqrt_rational(Fraction(3, 20))
    assert r * r == Fraction(3, 20)
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)


@given(nonzero, rationals, rationals)
def test_quadratic_roots_vieta(A, B, C):
    if B * B - 4 * A * C < 0:
        with pytest.raises(ValueError):
            quadratic_roots(A, B, C)
        return
    r1, r2 = quadratic_roots(A, B, C)
    assert r1 <= r2
    assert r1 + r2 == -B / A
    assert r1 * r2 == C / A
    for r in (r1, r2):
        assert r * r * A + r * B + C == 0
