"""The differentiation recurrence behind P_{k,i} and Q^{[p]}_{k,i}."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, List, Sequence, Tuple

from loguru import logger

from src.combinatorics import pochhammer
from src.errors import InvalidInputError, InvariantViolation
from src.recurrence.polys import ShiftedPoly, poly_shift

ZETA_ALPHA = (1, 1)
POLYLOG_ALPHA = (1, 0)


@dataclass(frozen=True)
class RecurrenceSetup:
    """Shape data the recurrence needs: a rows of degree <= n and the row-0 weights."""

    a: int
    n: int
    alpha0: int = 1
    alpha1: int = 1

    def __post_init__(self):
        if self.a < 1 or self.n < 0:
            raise InvalidInputError(f"need a >= 1 and n >= 0, got a={self.a}, n={self.n}")

    @property
    def alpha(self) -> Tuple[int, int]:
        return (self.alpha0, self.alpha1)


def as_setup(obj: Any) -> RecurrenceSetup:
    """Accept a RecurrenceSetup or anything exposing ``recurrence_setup()``."""
    if isinstance(obj, RecurrenceSetup):
        return obj
    if hasattr(obj, "recurrence_setup"):
        return obj.recurrence_setup()
    raise InvalidInputError(f"cannot derive a recurrence setup from {type(obj).__name__}")


@dataclass(frozen=True)
class RecurrenceState:
    """All rows 0..A of one recurrence level.

    Row i >= 1 is stored over z^{level-1}; row 0 over z^{level-1} (1-z)^{level-1}.
    ``degree_bound`` is the degree allowed for rows i >= 1 (n for P, (r+1)n for Q).
    """

    level: int
    polys: Tuple[ShiftedPoly, ...]
    alpha: Tuple[int, int]
    degree_bound: int

    @property
    def rows(self) -> int:
        """A, the index of the last row."""
        return len(self.polys) - 1

    def row(self, i: int) -> ShiftedPoly:
        if 0 <= i <= self.rows:
            return self.polys[i]
        return ShiftedPoly.zero(self.level - 1, 0)

    def check_invariants(self) -> None:
        k = self.level
        for i, poly in enumerate(self.polys):
            if i == 0:
                orders, bound = (k - 1, k - 1), self.degree_bound + k - 1
            else:
                orders, bound = (k - 1, 0), self.degree_bound
            if (poly.z_order, poly.one_minus_z_order) != orders:
                raise InvariantViolation(
                    "unexpected denominator orders",
                    index=(k, i),
                    observed=(poly.z_order, poly.one_minus_z_order),
                )
            if poly.degree > bound:
                raise InvariantViolation(
                    "numerator degree too large", index=(k, i), observed=poly.degree
                )


def initial_state(
    rows: Sequence[Sequence[int]],
    alpha: Tuple[int, int] = ZETA_ALPHA,
    total_rows: int = 0,
    shift: int = 0,
    p: int = 0,
) -> RecurrenceState:
    """Level-1 state from a coefficient table.

    With the defaults this is P_{1,0} = 0, P_{1,i} = P_i(z) = sum_j c_{i,j} z^j.
    With ``shift = rn`` and derivative order ``p`` it is Q^{[p]}_{1,i+p} =
    z^{rn} P_i(z) (-1)^p (i)_p, all other rows zero.

    Args:
        rows: a x (n+1) integer coefficients c_{i,j} (row i-1 holds P_i)
        alpha: Weights (α0, α1) of the row-0 rule
        total_rows: A; defaults to a + p
        shift: Power of z multiplying every P_i
        p: Derivative order of the underlying rational function

    Returns:
        Level-1 recurrence state
    """
    a = len(rows)
    if a == 0:
        raise InvalidInputError("coefficient table has no rows")
    n = len(rows[0]) - 1
    A = total_rows or a + p
    if A < a + p:
        raise InvalidInputError(f"need at least a+p={a + p} rows, got {A}")

    polys: List[ShiftedPoly] = [ShiftedPoly.zero() for _ in range(A + 1)]
    for i, row in enumerate(rows, start=1):
        if len(row) != n + 1:
            raise InvalidInputError("ragged coefficient table")
        weight = (-1) ** p * pochhammer(i, p)
        coeffs = poly_shift([Fraction(c) * weight for c in row], shift)
        polys[i + p] = ShiftedPoly(coeffs)

    state = RecurrenceState(1, tuple(polys), tuple(alpha), n + shift)
    state.check_invariants()
    return state


def step(state: RecurrenceState, upper_only: bool = False) -> RecurrenceState:
    """Level k -> k+1.

    P_{k+1,i} = P'_{k,i} - P_{k,i+1} / z for 1 <= i <= A (row A+1 is zero) and
    P_{k+1,0} = P'_{k,0} + (α1 z + α0) / (z (1-z)) P_{k,1}.

    Args:
        state: Current level
        upper_only: Skip row 0 (left zero) when only rows i >= 1 are needed

    Returns:
        The next level, with denominator orders normalised and degrees checked
    """
    k = state.level
    alpha0, alpha1 = state.alpha
    new_polys: List[ShiftedPoly] = []

    if upper_only:
        new_polys.append(ShiftedPoly.zero(k, k))
    else:
        row0 = state.row(0).derivative() + (
            state.row(1).times_poly((alpha0, alpha1)).divide_z().divide_one_minus_z()
        )
        new_polys.append(row0.with_orders(k, k))

    for i in range(1, state.rows + 1):
        poly = state.row(i).derivative() - state.row(i + 1).divide_z()
        new_polys.append(poly.with_orders(k, 0))

    new_state = RecurrenceState(k + 1, tuple(new_polys), state.alpha, state.degree_bound)
    new_state.check_invariants()
    return new_state


def run(state: RecurrenceState, level: int, upper_only: bool = False) -> Iterator[RecurrenceState]:
    """Yield ``state`` and every following level up to ``level`` inclusive."""
    if level < state.level:
        raise InvalidInputError(f"target level {level} is below current level {state.level}")
    yield state
    while state.level < level:
        state = step(state, upper_only=upper_only)
        yield state
    logger.debug(f"recurrence reached level {level} ({state.rows} rows)")


def advance(state: RecurrenceState, level: int, upper_only: bool = False) -> RecurrenceState:
    """The state at ``level``."""
    for state in run(state, level, upper_only=upper_only):
        pass
    return state


def psi(rows: Sequence[Sequence[int]], k: int, eps: int) -> ShiftedPoly:
    """ψ_{k,ε}: ψ_{1,ε} = 0 and ψ_{k,ε} = ψ'_{k-1,ε} + z^{ε-1} (1-z)^{-1} P_{k-1,1}.

    P_{k,0} = α0 ψ_{k,0} + α1 ψ_{k,1}.
    """
    if eps not in (0, 1):
        raise InvalidInputError(f"eps must be 0 or 1, got {eps}")
    state = initial_state(rows)
    value = ShiftedPoly.zero()
    while state.level < k:
        extra = state.row(1).divide_one_minus_z()
        if not eps:
            extra = extra.divide_z()
        value = value.derivative() + extra
        state = step(state, upper_only=True)
    return value.with_orders(max(value.z_order, k - 1), max(value.one_minus_z_order, k - 1))
