"""Tests for parameter validation and derived quantities."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.construct import Mode, Params, parse_rational
from src.recurrence import POLYLOG_ALPHA, ZETA_ALPHA


@pytest.mark.parametrize(
    "value, expected",
    [(3, Fraction(3)), ("7/2", Fraction(7, 2)), ("2.5", Fraction(5, 2)), (0.25, Fraction(1, 4))],
)
def test_parse_rational(value, expected):
    assert parse_rational(value) == expected


@pytest.mark.parametrize("value", [True, "abc", "1/0", None])
def test_parse_rational_rejects(value):
    with pytest.raises(ValueError):
        parse_rational(value)


def test_derived_quantities(zeta_params):
    assert zeta_params.mode is Mode.ZETA
    assert zeta_params.kappa == Fraction(7, 2)
    assert (zeta_params.rn, zeta_params.omega_n, zeta_params.big_omega_n) == (2, 8, 8)
    assert zeta_params.kappa_n == 7
    assert zeta_params.unknowns == zeta_params.a * (zeta_params.n + 1) == 15
    assert zeta_params.equations == 7
    assert zeta_params.alpha == ZETA_ALPHA
    assert zeta_params.admissible_window() == (6, 7)
    assert len(zeta_params.admissible_pairs()) == 6


def test_polylog_window(polylog_params):
    assert polylog_params.alpha == POLYLOG_ALPHA
    assert polylog_params.admissible_window() == (5, 8)
    assert polylog_params.admissible_pairs()[0] == (0, 5)
    assert polylog_params.recurrence_setup().alpha == POLYLOG_ALPHA


def test_kappa_defaults_to_omega():
    params = Params(a=3, n=2, omega=1, Omega=2)
    assert params.kappa == Fraction(1)
    assert params.h == 0


def test_alias_and_field_name_both_accepted():
    by_alias = Params(a=3, n=2, omega=1, Omega=2)
    by_name = Params(a=3, n=2, omega=1, big_omega=2)
    assert by_alias == by_name


@pytest.mark.parametrize(
    "overrides",
    [
        {"a": 2, "Omega": 2},
        {"omega": 3, "Omega": 2},
        {"omega": "1/2"},
        {"r": "1/2"},
        {"omega": "3/2", "n": 3},
        {"kappa": "5/3"},
        {"z0": 2},
        {"q": 2},
        {"a": 0},
    ],
)
def test_invalid_zeta_parameters(overrides):
    data = {"a": 4, "n": 2, "omega": 1, "Omega": 2, **overrides}
    with pytest.raises(ValidationError):
        Params(**data)


@pytest.mark.parametrize(
    "overrides",
    [{"z0": 1}, {"z0": "1/2"}, {"z0": "-3/2", "q": 1}],
)
def test_invalid_polylog_parameters(overrides):
    data = {"a": 4, "n": 2, "omega": 1, "Omega": 2, "mode": "polylog", "z0": -2, **overrides}
    with pytest.raises(ValidationError):
        Params(**data)


def test_polylog_rational_point_with_matching_q():
    params = Params(a=4, n=2, omega=1, Omega=2, mode="polylog", z0="-3/2", q=2)
    assert params.z0 == Fraction(-3, 2)


def test_with_n_revalidates(zeta_params):
    bigger = zeta_params.with_n(4)
    assert bigger.n == 4
    assert bigger.omega_n == 16
    with pytest.raises(ValidationError):
        Params(a=3, n=2, omega="3/2", Omega="3/2").with_n(3)


def test_table_round_trip(polylog_params):
    table = polylog_params.to_table()
    assert table["z0"] == "-2"
    assert table["mode"] == "polylog"
    assert Params.model_validate(table) == polylog_params
    assert "polylog" in polylog_params.describe()


def test_params_are_frozen(zeta_params):
    with pytest.raises(ValidationError):
        zeta_params.a = 9
