from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leftorder.quadratic import QuadExpr, parse_quadratic

SQRT2 = QuadExpr.sqrt(2)


def test_basic_signs():
    assert SQRT2.sign() == 1
    assert (-SQRT2).sign() == -1
    assert (1 + SQRT2).sign() == 1
    assert (1 - SQRT2).sign() == -1
    assert (2 - SQRT2).sign() == 1
    assert QuadExpr(0, 0, 2).sign() == 0


def test_comparisons_against_rationals():
    # 1.414213... pinched between neighbouring rationals
    assert SQRT2 > Fraction(141, 100)
    assert SQRT2 < Fraction(142, 100)
    assert SQRT2 > 1
    assert SQRT2 < 2
    assert QuadExpr(3, 0, 2) == 3


def test_arithmetic():
    x = 1 + SQRT2
    assert x * x == QuadExpr(3, 2, 2)  # (1+s)^2 = 3 + 2s
    assert x - 1 == SQRT2
    assert (x * x.inverse()) == 1
    assert (SQRT2 * SQRT2) == 2


def test_division():
    half = SQRT2 / 2
    assert half + half == SQRT2
    assert (SQRT2 / SQRT2) == 1
    with pytest.raises(ZeroDivisionError):
        QuadExpr(0, 0, 2).inverse()


def test_rejects_square_radicand():
    with pytest.raises(ValueError):
        QuadExpr(1, 1, 4)
    with pytest.raises(ValueError):
        QuadExpr(1, 1, 1)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QuadExpr.sqrt(2) + QuadExpr.sqrt(3)
    # rational payloads may cross radicands freely
    assert QuadExpr.rational(1, 2) + QuadExpr.rational(2, 3) == 3


def test_parse():
    assert parse_quadratic("sqrt2") == SQRT2
    assert parse_quadratic("1+1*sqrt2") == 1 + SQRT2
    assert parse_quadratic("1/2*sqrt2") == SQRT2 / 2
    assert parse_quadratic("3-1*sqrt5") == QuadExpr(3, -1, 5)
    assert parse_quadratic("7/3") == QuadExpr(Fraction(7, 3), 0, 2)
    assert parse_quadratic("2+sqrt2") == 2 + SQRT2
    with pytest.raises(ValueError):
        parse_quadratic("sqrt(2")


def test_is_rational_flag():
    assert parse_quadratic("7/3").is_rational()
    assert not parse_quadratic("sqrt2").is_rational()


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=20)


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
def test_sign_matches_float(p, q, d):
    x = QuadExpr(p, q, d)
    approx = float(p) + float(q) * d**0.5
    if abs(approx) > 1e-9:
        assert x.sign() == (1 if approx > 0 else -1)


@given(rationals, rationals, rationals, rationals)
def test_field_axioms_sample(p1, q1, p2, q2):
    x = QuadExpr(p1, q1, 2)
    y = QuadExpr(p2, q2, 2)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + 1) == x * y + x
