"""Tests for θ tables: closed form against unit-vector probing."""

from fractions import Fraction

import pytest

from src.combinatorics import kappa_sum
from src.errors import InvalidInputError
from src.recurrence import (
    POLYLOG_ALPHA,
    ZETA_ALPHA,
    RecurrenceSetup,
    compare_theta,
    theta_closed,
    theta_oracle,
    theta_table,
)

ZETA = RecurrenceSetup(a=2, n=4, alpha0=ZETA_ALPHA[0], alpha1=ZETA_ALPHA[1])


def test_level_one_is_identity():
    for i in range(1, 3):
        for j in range(5):
            for i_ in range(1, 3):
                for j_ in range(5):
                    expected = 1 if (i, j) == (i_, j_) else 0
                    assert theta_oracle(1, i, j, i_, j_, ZETA) == expected
                    assert theta_closed(1, i, j, i_, j_, ZETA) == expected


def test_known_entries():
    assert theta_oracle(2, 1, 3, 1, 3, ZETA) == 3
    assert theta_closed(2, 1, 3, 1, 3, ZETA) == 3
    for T in range(5):
        assert theta_oracle(2, 1, T, 2, T, ZETA) == -1
        assert theta_closed(2, 1, T, 2, T, ZETA) == -1


def test_upper_rows_follow_composition_sums():
    setup = RecurrenceSetup(a=3, n=5)
    for k in range(1, 7):
        for i in range(1, 4):
            for i_ in range(i, 4):
                for T in range(6):
                    expected = (-1) ** (i_ - i) * kappa_sum(T, k, i_ - i)
                    assert theta_oracle(k, i, T, i_, T, setup) == expected


def test_closed_form_vanishes_off_diagonal():
    assert theta_closed(4, 1, 2, 2, 3, ZETA) == 0
    assert theta_closed(3, 2, 1, 1, 1, ZETA) == 0


def test_row_zero_sample_agrees():
    for j in range(7):
        for i_ in (1, 2):
            for j_ in range(5):
                assert theta_closed(3, 0, j, i_, j_, ZETA) == theta_oracle(3, 0, j, i_, j_, ZETA)


def test_index_validation():
    with pytest.raises(InvalidInputError):
        theta_oracle(0, 1, 0, 1, 0, ZETA)
    with pytest.raises(InvalidInputError):
        theta_closed(2, 1, 0, 3, 0, ZETA)
    with pytest.raises(InvalidInputError):
        theta_table(ZETA, 3, method="guess")


@pytest.mark.parametrize("alpha", [ZETA_ALPHA, POLYLOG_ALPHA])
@pytest.mark.parametrize("a, n", [(1, 3), (2, 2), (2, 5), (3, 3), (3, 5)])
def test_closed_form_matches_oracle(a, n, alpha):
    setup = RecurrenceSetup(a=a, n=n, alpha0=alpha[0], alpha1=alpha[1])
    assert compare_theta(setup, 10) == []


def test_oracle_table_respects_sparsity():
    table = theta_table(RecurrenceSetup(a=3, n=4), 8)
    assert table.sparsity_violations() == []
    assert table.get(1, 1, 0, 1, 0) == Fraction(1)
    assert table.to_json()["1,1,0,1,0"] == "1"
