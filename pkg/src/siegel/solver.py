"""Constructive small solutions: certified enumeration or kernel + LLL."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import mpmath
from loguru import logger

from src.errors import InvalidInputError, InvariantViolation, SiegelError
from src.siegel.lattice import Vector, enumerate_short, integer_kernel, lll_reduce
from src.siegel.problem import BOUND_DIGITS, SiegelProblem, bound_X

ENUMERATION_LIMIT = 12
WEIGHT_BITS = 20


@dataclass
class SiegelSolution:
    """Returned vector with its achieved magnitudes against the Minkowski targets."""

    x: Vector
    backend: str
    X: mpmath.mpf
    sup_norm: int
    sup_ratio: float
    row_ratios: List[float] = field(default_factory=list)
    visited: int = 0

    @property
    def within_bounds(self) -> bool:
        return self.sup_ratio <= 1 and all(r <= 1 for r in self.row_ratios)


def normalize_sign(x: Vector) -> Vector:
    """Flip x so that its first nonzero entry is positive."""
    for v in x:
        if v:
            return x if v > 0 else tuple(-c for c in x)
    return x


def _key(x: Vector) -> Tuple[int, int, Vector]:
    return (max(abs(v) for v in x), sum(v * v for v in x), normalize_sign(x))


def _row_ratios(problem: SiegelProblem, x: Vector, X: mpmath.mpf) -> List[float]:
    ratios = []
    with mpmath.workdps(BOUND_DIGITS):
        for row, h, g in zip(problem.weighted, problem.H[problem.m0 :], problem.G):
            value = abs(sum(a * b for a, b in zip(row, x)))
            ratios.append(float(value * g / (h * X)))
    return ratios


def _check_equalities(problem: SiegelProblem, x: Vector) -> None:
    for m, row in enumerate(problem.equalities):
        if sum(a * b for a, b in zip(row, x)):
            raise InvariantViolation("equality row not satisfied", index=(m,), observed=x)


def _solve_enumeration(
    problem: SiegelProblem, kernel: List[Vector], X: mpmath.mpf
) -> SiegelSolution:
    basis = lll_reduce(kernel)
    X_floor = int(mpmath.floor(X))
    best: List[Optional[Tuple[int, int, Vector]]] = [None]

    def admissible(x: Vector) -> bool:
        if max(abs(v) for v in x) > X_floor:
            return False
        return all(r <= 1 for r in _row_ratios(problem, x, X))

    def visit(x: Vector) -> Optional[Fraction]:
        if not admissible(x):
            return None
        key = _key(x)
        if best[0] is None or key < best[0]:
            best[0] = key
        sup = best[0][0]
        return Fraction(problem.N * sup * sup)

    visited = enumerate_short(basis, Fraction(problem.N * X_floor * X_floor), visit)
    if best[0] is None:
        raise InvariantViolation(
            "enumeration found no vector inside the Minkowski box", observed=mpmath.nstr(X, 15)
        )
    x = best[0][2]
    sup = best[0][0]
    return SiegelSolution(
        x=x,
        backend="enumeration",
        X=X,
        sup_norm=sup,
        sup_ratio=float(sup / X),
        row_ratios=_row_ratios(problem, x, X),
        visited=visited,
    )


def _weight_shift(problem: SiegelProblem) -> int:
    shift = WEIGHT_BITS
    with mpmath.workdps(BOUND_DIGITS):
        for h, g in zip(problem.H[problem.m0 :], problem.G):
            shift = max(shift, WEIGHT_BITS + int(mpmath.ceil(mpmath.log(h / g, 2))))
    return shift


def _solve_reduction(problem: SiegelProblem, kernel: List[Vector], X: mpmath.mpf) -> SiegelSolution:
    N = problem.N
    if problem.weighted:
        shift = _weight_shift(problem)
        scale = 2**shift
        with mpmath.workdps(BOUND_DIGITS):
            weights = [
                max(1, int(mpmath.nint(scale * g / h)))
                for h, g in zip(problem.H[problem.m0 :], problem.G)
            ]
        embedded = [
            [scale * v for v in b]
            + [w * sum(a * c for a, c in zip(row, b)) for w, row in zip(weights, problem.weighted)]
            for b in kernel
        ]
        reduced = [tuple(v // scale for v in row[:N]) for row in lll_reduce(embedded)]
    else:
        reduced = lll_reduce(kernel)

    candidates = [x for x in reduced if any(x)]
    if not candidates:
        raise SiegelError("no nonzero solution")
    x = normalize_sign(min(candidates, key=_key))
    sup = max(abs(v) for v in x)
    solution = SiegelSolution(
        x=x,
        backend="reduction",
        X=X,
        sup_norm=sup,
        sup_ratio=float(sup / X),
        row_ratios=_row_ratios(problem, x, X),
    )
    if not solution.within_bounds:
        logger.warning(
            f"reduction vector exceeds the Minkowski targets: sup/X = {solution.sup_ratio:.3g}, "
            f"max row ratio = {max(solution.row_ratios, default=0.0):.3g}"
        )
    return solution


def solve(problem: SiegelProblem, backend: str = "auto") -> SiegelSolution:
    """Nonzero integer x with the equality rows vanishing and small weighted rows.

    Args:
        problem: Validated problem
        backend: "enumeration", "reduction" or "auto" (enumeration when N - M0 <= 12)

    Returns:
        The solution; with enumeration every bound is certified, with reduction the
        achieved/target ratios are reported instead

    Raises:
        SiegelError: If the equality rows have full column rank
    """
    if backend == "auto":
        backend = "enumeration" if problem.N - problem.m0 <= ENUMERATION_LIMIT else "reduction"
    if backend not in ("enumeration", "reduction"):
        raise InvalidInputError(f"unknown backend {backend!r}")

    kernel = integer_kernel(problem.equalities, problem.N)
    if not kernel:
        raise SiegelError("no nonzero solution")
    X = bound_X(problem)
    logger.info(
        f"Siegel solve: N={problem.N}, M0={problem.m0}, M={problem.M}, kernel rank "
        f"{len(kernel)}, backend={backend}"
    )

    if backend == "enumeration":
        solution = _solve_enumeration(problem, kernel, X)
    else:
        solution = _solve_reduction(problem, kernel, X)

    _check_equalities(problem, solution.x)
    return solution
