"""Tests for lcm(1..N), Δ_{a,N} and their oracles."""

import math
from functools import reduce

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arith import binomial_lcm, delta, delta_bruteforce, delta_log_bound, lcm_range
from src.errors import InvalidInputError, RangeGuardError


@pytest.mark.parametrize("N, expected", [(1, 1), (6, 60), (10, 2520)])
def test_lcm_range_values(N, expected):
    assert lcm_range(N).value == expected


@given(st.integers(min_value=1, max_value=120))
@settings(max_examples=40, deadline=None)
def test_lcm_range_matches_fold(N):
    assert lcm_range(N).value == reduce(math.lcm, range(1, N + 1), 1)


@pytest.mark.parametrize("a, N, expected", [(1, 6, 60), (2, 4, 24), (4, 4, 24)])
def test_delta_values(a, N, expected):
    assert delta(a, N).value == expected


@pytest.mark.parametrize("a, N, expected", [(1, 1, 1), (1, 3, 6), (2, 4, 24)])
def test_delta_bruteforce_values(a, N, expected):
    assert delta_bruteforce(a, N) == expected


def test_delta_matches_bruteforce_on_full_grid():
    for a in range(1, 5):
        for N in range(1, 31):
            assert delta(a, N).value == delta_bruteforce(a, N), (a, N)


def test_delta_is_factorial_when_a_covers_range():
    for N in range(1, 9):
        assert delta(N, N).value == math.factorial(N)


def test_delta_divisibility_in_both_arguments():
    for a in range(1, 6):
        for N in range(1, 40):
            assert delta(a, N).divides(delta(a + 1, N))
            assert delta(a, N).divides(delta(a, N + 1))


def test_delta_bruteforce_guard():
    with pytest.raises(RangeGuardError):
        delta_bruteforce(7, 10)
    with pytest.raises(RangeGuardError):
        delta_bruteforce(2, 41)


def test_non_positive_arguments_rejected():
    with pytest.raises(InvalidInputError):
        lcm_range(0)
    with pytest.raises(InvalidInputError):
        delta(0, 5)
    with pytest.raises(InvalidInputError):
        binomial_lcm(0)


@pytest.mark.parametrize("N, expected", [(1, 1), (4, 12), (6, 60)])
def test_binomial_lcm_values(N, expected):
    assert binomial_lcm(N) == expected


def test_binomial_lcm_identity():
    for N in range(1, 201):
        assert binomial_lcm(N) * (N + 1) == lcm_range(N + 1).value


@pytest.mark.parametrize("a", [1, 4, 8])
def test_delta_log_growth_below_bound(a):
    N = 600
    with mpmath.workdps(30):
        ratio = delta(a, N).log() / N
        assert ratio < mpmath.euler + mpmath.log(a + 1) + mpmath.mpf("0.05")
        assert delta_log_bound(a, N) / N == pytest.approx(float(mpmath.euler + mpmath.log(a + 1)))
