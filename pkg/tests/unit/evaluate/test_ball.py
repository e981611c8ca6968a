"""Tests for midpoint-radius arithmetic."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.evaluate import BallReal

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


def test_exact_integers_have_zero_radius():
    with mpmath.workdps(30):
        ball = BallReal.exact(12345)
        assert ball.rad == 0
        assert ball.contains(12345)


def test_exact_fraction_contains_value():
    with mpmath.workdps(30):
        ball = BallReal.exact(Fraction(1, 3))
        assert ball.rad > 0
        assert ball.contains(Fraction(1, 3))


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        BallReal(mpmath.mpf(1), mpmath.mpf(-1))


@given(x=fractions, y=fractions)
@settings(max_examples=60, deadline=None)
def test_operations_enclose_exact_results(x, y):
    with mpmath.workdps(25):
        bx, by = BallReal.exact(x), BallReal.exact(y)
        assert (bx + by).contains(x + y)
        assert (bx - by).contains(x - y)
        assert (bx * by).contains(x * y)
        assert (-bx).contains(-x)
        assert (3 - bx).contains(3 - x)
        assert (2 * bx).contains(2 * x)


def test_radius_propagation():
    with mpmath.workdps(30):
        a = BallReal.around(1, mpmath.mpf("0.1"))
        b = BallReal.around(2, mpmath.mpf("0.2"))
        product = a * b
        assert product.contains(mpmath.mpf("1.1") * mpmath.mpf("2.2"))
        assert product.contains(mpmath.mpf("0.9") * mpmath.mpf("1.8"))
        assert product.rad >= mpmath.mpf("0.42")


def test_bounds_and_predicates():
    with mpmath.workdps(30):
        ball = BallReal.around(mpmath.mpf("0.5"), 1)
        assert ball.contains_zero()
        assert ball.lower < 0 < ball.upper
        assert ball.magnitude() >= mpmath.mpf("1.5")
        inner = BallReal.around(mpmath.mpf("0.5"), mpmath.mpf("0.25"))
        assert inner.subset_of(ball)
        assert not ball.subset_of(inner)
        assert not BallReal.exact(1).contains_zero()
        assert BallReal.zero().contains_zero()


def test_json_form():
    with mpmath.workdps(30):
        payload = BallReal.around(mpmath.mpf(2), mpmath.mpf("1e-20")).to_json(10)
    assert payload["mid"] == "2.0"
    assert float(payload["rad"]) >= 1e-20


def test_self_difference_at_lower_precision_contains_zero():
    with mpmath.workdps(89):
        ball = BallReal.around(mpmath.zeta(3), mpmath.mpf(10) ** -86)
    with mpmath.workdps(80):
        assert (ball - ball).contains_zero()
        assert (ball + (-ball)).contains_zero()


def test_negation_keeps_midpoint_exact():
    with mpmath.workdps(89):
        ball = BallReal.around(mpmath.pi, mpmath.mpf(10) ** -80)
    with mpmath.workdps(20):
        assert (-(-ball)).mid == ball.mid
        assert (-ball).rad == ball.rad


def test_fraction_membership_is_exact():
    with mpmath.workdps(15):
        ball = BallReal(mpmath.mpf(1) / 3, mpmath.mpf(0))
        assert not ball.contains(Fraction(1, 3))
        assert BallReal.exact(Fraction(1, 3)).contains(Fraction(1, 3))
