"""θ coefficients: p_{k,i,j} = sum over (i', j') of θ_{k,i,j,i',j'} c_{i',j'}."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, Dict, List, Tuple

from loguru import logger

from src.combinatorics import kappa_sum, pochhammer
from src.errors import InvalidInputError
from src.recurrence.engine import RecurrenceSetup, RecurrenceState, as_setup, initial_state, run

Index = Tuple[int, int, int, int, int]


@dataclass
class ThetaTable:
    """Sparse table of θ_{k,i,j,i',j'} for 1 <= k <= k_max; absent entries are zero."""

    setup: RecurrenceSetup
    k_max: int
    entries: Dict[Index, Fraction] = field(default_factory=dict)

    def get(self, k: int, i: int, j: int, i_: int, j_: int) -> Fraction:
        return self.entries.get((k, i, j, i_, j_), Fraction(0))

    def sparsity_violations(self) -> List[Index]:
        """Nonzero entries where θ must vanish: (i >= 1, j != j'), i > i', or 1 <= i <= i' - k."""
        bad = []
        for (k, i, j, i_, j_), value in self.entries.items():
            if value == 0:
                continue
            if (i >= 1 and j != j_) or i > i_ or 1 <= i <= i_ - k:
                bad.append((k, i, j, i_, j_))
        return bad

    def to_json(self) -> Dict[str, str]:
        return {",".join(map(str, key)): str(value) for key, value in sorted(self.entries.items())}


def _check_index(k: int, i: int, j: int, i_: int, j_: int, setup: RecurrenceSetup) -> None:
    if k < 1 or not 0 <= i <= setup.a or j < 0 or not 1 <= i_ <= setup.a or not 0 <= j_ <= setup.n:
        raise InvalidInputError(f"theta index {(k, i, j, i_, j_)} out of range for {setup}")


def unit_table(setup: RecurrenceSetup, i_: int, j_: int) -> List[List[int]]:
    """Coefficient table with c_{i',j'} = 1 and every other entry 0."""
    rows = [[0] * (setup.n + 1) for _ in range(setup.a)]
    rows[i_ - 1][j_] = 1
    return rows


@lru_cache(maxsize=512)
def probe_states(setup: RecurrenceSetup, i_: int, j_: int, k: int) -> Tuple[RecurrenceState, ...]:
    start = initial_state(unit_table(setup, i_, j_), alpha=setup.alpha)
    return tuple(run(start, k))


def theta_oracle(k: int, i: int, j: int, i_: int, j_: int, params: Any) -> Fraction:
    """Run the recurrence on the unit table at (i', j') and read p_{k,i,j}."""
    setup = as_setup(params)
    _check_index(k, i, j, i_, j_, setup)
    state = probe_states(setup, i_, j_, k)[k - 1]
    return state.row(i).coefficient(j)


@lru_cache(maxsize=None)
def _theta_upper(k: int, i: int, j: int, i_: int, j_: int) -> int:
    """Closed form for rows i >= 1."""
    if j != j_ or i > i_ or i <= i_ - k:
        return 0
    return (-1) ** (i_ - i) * kappa_sum(j_, k, i_ - i)


def _theta_row_zero(k: int, j: int, i_: int, j_: int, setup: RecurrenceSetup) -> int:
    """Closed form for row 0, from the ψ decomposition of P_{k,0}.

    With s < 0 the (1-z)^s expansion index, t the exponent after the Leibniz
    expansion and α the derivative order, the row-1 coefficient involved is
    θ_{k-α-1,1,t+s-ε+k,i',j'}, which vanishes unless t = j' - s + ε - k.
    """
    n = setup.n
    total = 0
    for eps in range(max(0, j + 2 - n - k), min(1, j) + 1):
        weight = setup.alpha[eps]
        if weight == 0:
            continue
        for s in range(1 - k, 0):
            t = j_ - s + eps - k
            if not -s - k + eps <= t <= n - s - k + eps:
                continue
            sigma = j - t - k + 1
            if not 0 <= sigma <= s + k - 1:
                continue
            inner = 0
            for alpha in range(-1 - s, k - 1):
                inner += (
                    pochhammer(t + 1, s + alpha + 1)
                    * pochhammer(s + alpha + 2, -s - 1)
                    * _theta_upper(k - alpha - 1, 1, j_, i_, j_)
                )
            total += weight * (-1) ** sigma * comb(s + k - 1, sigma) * inner
    return total


def theta_closed(k: int, i: int, j: int, i_: int, j_: int, params: Any) -> Fraction:
    """θ from the composition sums (i >= 1) and the row-0 quadruple sum (i = 0)."""
    setup = as_setup(params)
    _check_index(k, i, j, i_, j_, setup)
    if i >= 1:
        return Fraction(_theta_upper(k, i, j, i_, j_))
    return Fraction(_theta_row_zero(k, j, i_, j_, setup))


def theta_table(params: Any, k_max: int, method: str = "oracle") -> ThetaTable:
    """Every θ_{k,i,j,i',j'} with k <= k_max.

    Args:
        params: Params or RecurrenceSetup
        k_max: Last level
        method: "oracle" (unit-vector probing) or "closed"

    Returns:
        Sparse ThetaTable holding the nonzero entries
    """
    setup = as_setup(params)
    if method not in ("oracle", "closed"):
        raise InvalidInputError(f"unknown theta method {method!r}")
    table = ThetaTable(setup, k_max)

    for i_ in range(1, setup.a + 1):
        for j_ in range(setup.n + 1):
            if method == "oracle":
                for state in probe_states(setup, i_, j_, k_max):
                    for i, poly in enumerate(state.polys):
                        for j, value in enumerate(poly.numerator):
                            if value:
                                table.entries[(state.level, i, j, i_, j_)] = value
                continue
            for k in range(1, k_max + 1):
                for i in range(setup.a + 1):
                    j_range = range(setup.n + k) if i == 0 else range(setup.n + 1)
                    for j in j_range:
                        value = theta_closed(k, i, j, i_, j_, setup)
                        if value:
                            table.entries[(k, i, j, i_, j_)] = value

    logger.debug(f"theta table ({method}) up to k={k_max}: {len(table.entries)} nonzero entries")
    return table


@dataclass(frozen=True)
class ThetaDiscrepancy:
    index: Index
    oracle: Fraction
    closed: Fraction


def compare_theta(params: Any, k_max: int) -> List[ThetaDiscrepancy]:
    """Every index where the closed form and the oracle disagree, recorded as found."""
    setup = as_setup(params)
    oracle = theta_table(setup, k_max, "oracle")
    closed = theta_table(setup, k_max, "closed")
    keys = sorted(set(oracle.entries) | set(closed.entries))
    found = [
        ThetaDiscrepancy(key, oracle.get(*key), closed.get(*key))
        for key in keys
        if oracle.get(*key) != closed.get(*key)
    ]
    if found:
        logger.warning(f"{len(found)} theta discrepancies for {setup} up to k={k_max}")
    else:
        logger.success(f"theta closed form matches oracle for {setup} up to k={k_max}")
    return found
