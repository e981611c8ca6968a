"""Small-solution problems: exact equality rows plus weighted inequality rows."""

from dataclasses import dataclass
from math import isqrt
from typing import Sequence, Tuple

import mpmath
from loguru import logger

from src.errors import InvalidInputError

BOUND_DIGITS = 60


def _as_mpf(value) -> mpmath.mpf:
    with mpmath.workdps(BOUND_DIGITS):
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)


@dataclass(frozen=True)
class SiegelProblem:
    """λ (M x N integers): rows 0..M0-1 must vanish on x, rows M0..M-1 carry weights.

    H holds one magnitude bound per row (H_m >= Euclidean norm of row m), G one
    weight >= 1 per weighted row.
    """

    lam: Tuple[Tuple[int, ...], ...]
    m0: int
    H: Tuple[mpmath.mpf, ...]
    G: Tuple[mpmath.mpf, ...] = ()
    n_unknowns: int = 0

    @classmethod
    def build(
        cls,
        lam: Sequence[Sequence[int]],
        m0: int,
        H: Sequence = (),
        G: Sequence = (),
        N: int = 0,
    ) -> "SiegelProblem":
        """Validate and freeze a problem; missing H default to max(1, ceil(row norm)).

        Args:
            lam: Rows of integer coefficients
            m0: Number of equality rows (the first m0 rows)
            H: Per-row magnitude bounds
            G: Weights for rows m0..M-1
            N: Number of unknowns, required only when ``lam`` has no rows
        """
        rows = tuple(tuple(int(v) for v in row) for row in lam)
        width = len(rows[0]) if rows else N
        if width < 1:
            raise InvalidInputError("problem needs at least one unknown")
        if any(len(row) != width for row in rows):
            raise InvalidInputError("ragged coefficient matrix")
        if not 0 <= m0 <= len(rows):
            raise InvalidInputError(f"M0={m0} outside 0..{len(rows)}")
        if not H:
            H = [max(1, integer_norm_ceiling(row)) for row in rows]
        if len(H) != len(rows):
            raise InvalidInputError(f"expected {len(rows)} H values, got {len(H)}")
        if len(G) != len(rows) - m0:
            raise InvalidInputError(f"expected {len(rows) - m0} G values, got {len(G)}")

        problem = cls(
            rows, m0, tuple(_as_mpf(h) for h in H), tuple(_as_mpf(g) for g in G), width
        )
        problem.validate()
        return problem

    @property
    def N(self) -> int:
        return self.n_unknowns or (len(self.lam[0]) if self.lam else 0)

    @property
    def M(self) -> int:
        return len(self.lam)

    @property
    def equalities(self) -> Tuple[Tuple[int, ...], ...]:
        return self.lam[: self.m0]

    @property
    def weighted(self) -> Tuple[Tuple[int, ...], ...]:
        return self.lam[self.m0 :]

    def validate(self) -> None:
        if self.M > self.m0 and not self.N > self.M:
            raise InvalidInputError(f"weighted problems need N > M, got N={self.N}, M={self.M}")
        if self.N - self.m0 < 1:
            raise InvalidInputError(f"need N - M0 >= 1, got N={self.N}, M0={self.m0}")
        with mpmath.workdps(BOUND_DIGITS):
            for m, (row, h) in enumerate(zip(self.lam, self.H)):
                if h <= 0:
                    raise InvalidInputError(f"H[{m}] must be positive")
                if h * h < sum(v * v for v in row) * (1 - mpmath.mpf(10) ** (-40)):
                    raise InvalidInputError(f"H[{m}]={h} is below the norm of row {m}")
            for m, g in enumerate(self.G, start=self.m0):
                if g < 1:
                    raise InvalidInputError(f"G[{m}]={g} must be >= 1")


def integer_norm_ceiling(row: Sequence[int]) -> int:
    """Smallest integer >= the Euclidean norm of an integer row."""
    square = sum(v * v for v in row)
    root = isqrt(square)
    return root if root * root == square else root + 1


def bound_X(problem: SiegelProblem) -> mpmath.mpf:
    """(H_1 ... H_{M0} G_{M0+1} ... G_M)^{1/(N-M0)}, nudged upward by one part in 10^50."""
    with mpmath.workdps(BOUND_DIGITS):
        product = mpmath.fprod([*problem.H[: problem.m0], *problem.G])
        X = mpmath.root(product, problem.N - problem.m0) * (1 + mpmath.mpf(10) ** (-50))
    logger.debug(f"Minkowski bound X = {mpmath.nstr(X, 12)} (N={problem.N}, M0={problem.m0})")
    return X
