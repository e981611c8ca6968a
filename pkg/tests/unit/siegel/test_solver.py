"""Tests for the constructive small-solution solver."""

from itertools import product

import mpmath
import pytest

from src.errors import InvalidInputError, SiegelError
from src.siegel import SiegelProblem, bound_X, integer_norm_ceiling, normalize_sign, solve


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def test_two_term_row():
    solution = solve(SiegelProblem.build([[2, 3]], 1))
    assert solution.x == (3, -2)
    assert solution.backend == "enumeration"
    assert solution.sup_norm == 3
    assert solution.within_bounds


def test_reduction_backend_on_two_term_row():
    solution = solve(SiegelProblem.build([[2, 3]], 1), backend="reduction")
    assert solution.x == (3, -2)


def test_no_solution_when_kernel_is_trivial():
    problem = SiegelProblem(((1, 0), (0, 1)), 2, (mpmath.mpf(1), mpmath.mpf(1)), (), 2)
    with pytest.raises(SiegelError):
        solve(problem)


def test_build_validation():
    with pytest.raises(InvalidInputError):
        SiegelProblem.build([[1, 2], [3]], 1)
    with pytest.raises(InvalidInputError):
        SiegelProblem.build([[1, 2]], 2)
    with pytest.raises(InvalidInputError):
        SiegelProblem.build([[3, 4, 0]], 1, H=[4])
    with pytest.raises(InvalidInputError):
        SiegelProblem.build([[1, 1, 1], [1, 2, 3]], 1, G=[0.5])
    with pytest.raises(InvalidInputError):
        solve(SiegelProblem.build([[2, 3]], 1), backend="magic")


def test_bound_and_norm_helpers():
    assert integer_norm_ceiling([3, 4]) == 5
    assert integer_norm_ceiling([1, 1]) == 2
    problem = SiegelProblem.build([[1, 1, 1]], 1, H=[4])
    with mpmath.workdps(30):
        assert abs(bound_X(problem) - 2) < mpmath.mpf(10) ** -20
    assert normalize_sign((0, -2, 1)) == (0, 2, -1)


def test_weighted_rows_are_controlled():
    problem = SiegelProblem.build([[1, 1, 1, 1], [1, 2, 3, 4]], 1, H=[2, 6], G=[1])
    solution = solve(problem)
    assert _dot(solution.x, (1, 1, 1, 1)) == 0
    assert solution.within_bounds
    assert len(solution.row_ratios) == 1


def _brute_min_sup(rows, N, limit):
    for s in range(1, limit + 1):
        for x in product(range(-s, s + 1), repeat=N):
            if max(abs(v) for v in x) == s and all(_dot(r, x) == 0 for r in rows):
                return s
    return None


def test_random_instances_certified(rng):
    checked = 0
    for _ in range(50):
        N = rng.randint(2, 6)
        m0 = rng.randint(1, N - 1)
        if N - m0 > 8:
            continue
        rows = [[rng.randint(-4, 4) for _ in range(N)] for _ in range(m0)]
        problem = SiegelProblem.build(rows, m0)
        solution = solve(problem, backend="enumeration")
        assert any(solution.x)
        assert all(_dot(r, solution.x) == 0 for r in rows)
        assert solution.sup_norm <= solution.X
        assert solution.within_bounds
        assert solution.x == normalize_sign(solution.x)
        if (2 * solution.sup_norm + 1) ** N <= 20000:
            assert _brute_min_sup(rows, N, solution.sup_norm) == solution.sup_norm
            checked += 1
    assert checked > 0
