"""Tests for the large-a constants, feasibility and the dimension bound."""

import math
from fractions import Fraction

import pytest

from src.errors import InvalidInputError
from src.report import (
    POLYLOG_DEFAULTS,
    ZETA_DEFAULTS,
    asymptotic_constants,
    dimension_bound,
    feasibility_check,
    finite_constants,
)


def test_zeta_headline_constants():
    constants = asymptotic_constants(mode="zeta", **ZETA_DEFAULTS)
    assert constants.logchi_coef == pytest.approx(10.35, abs=0.01)
    assert constants.logbeta_coef == pytest.approx(20.93, abs=0.01)
    assert constants.logalpha_coef == pytest.approx(5.31, abs=0.01)
    assert constants.tau_ratio_coef == pytest.approx(0.25, abs=0.01)
    assert constants.shrink_factor == pytest.approx(0.86, abs=0.01)
    assert constants.final_coef >= 0.21 - 1e-3


def test_polylog_headline_constants():
    constants = asymptotic_constants(mode="polylog", **POLYLOG_DEFAULTS)
    assert constants.logchi_coef == pytest.approx(9.0807, abs=0.01)
    assert constants.logbeta_coef == pytest.approx(17.915, abs=0.01)
    assert constants.logalpha_coef == pytest.approx(5.5034, abs=0.01)
    assert constants.final_coef >= 0.26 - 1e-3
    assert constants.to_dict()["mode"] == "polylog"


@pytest.mark.parametrize("defaults", [ZETA_DEFAULTS, POLYLOG_DEFAULTS])
def test_beta_minus_chi_is_kappa(defaults):
    constants = asymptotic_constants(**defaults)
    assert constants.logbeta_coef - constants.logchi_coef == pytest.approx(defaults["kappa"])


def test_asymptotic_constants_reject_bad_inputs():
    with pytest.raises(InvalidInputError):
        asymptotic_constants(r=0, kappa=1, omega=1, omega_coef=1, h_frac=0)
    with pytest.raises(InvalidInputError):
        asymptotic_constants(r=2, kappa=1, omega=1, omega_coef=1, h_frac=-0.1)


def test_feasibility_examples():
    assert feasibility_check("3.9", "10.58", "11.58", 36, 100, "zeta")
    assert not feasibility_check(2, 4, 3, 0, 10, "zeta")
    a = 10**4
    h = Fraction("0.3946") * a
    assert feasibility_check("5.3", "8.8343", "9.8343", h, a, "polylog")


def test_feasibility_monotonicity():
    base = dict(r=2, kappa=6, omega=3, h=2, a=10)
    assert feasibility_check(**base) == (3 * 2 + 3 > 10)
    grid = [(h, kappa, a) for h in range(0, 6) for kappa in range(5, 9) for a in range(5, 30, 5)]
    for h, kappa, a in grid:
        if feasibility_check(2, kappa, 3, h, a):
            assert feasibility_check(2, kappa, 3, h + 1, a)
            assert feasibility_check(2, kappa + 1, 3, h, a)
            assert feasibility_check(2, kappa, 3, h, a - 1)


def test_dimension_bound():
    assert dimension_bound(-Fraction(1), Fraction(1)) == 2
    assert dimension_bound(-2, 1, degree=2) == Fraction(3, 2)
    assert dimension_bound(-2, 1, real_embedding=False) == 6
    with pytest.raises(InvalidInputError):
        dimension_bound(-1, 0)
    with pytest.raises(InvalidInputError):
        dimension_bound(-1, 1, degree=0)


def test_dimension_bound_with_limit_constants():
    constants = asymptotic_constants(**ZETA_DEFAULTS)
    a = 10**6
    log_a = math.log(a)
    log_alpha = -constants.logalpha_coef * math.sqrt(a * log_a)
    log_beta = constants.logbeta_coef * log_a
    bound = float(dimension_bound(log_alpha, log_beta))
    expected = constants.tau_ratio_coef * math.sqrt(a / log_a) + 1
    assert bound == pytest.approx(expected, rel=0.05)


def test_finite_constants_match_evaluate(zeta_params):
    constants = finite_constants(zeta_params)
    assert constants.log_beta > constants.log_chi > 0
