"""Construction of F_n through the vanishing system and the first-nonvanishing checks."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Dict, List, Optional, Tuple

import mpmath
from loguru import logger

from src.construct.params import Params
from src.construct.table import CoeffTable, TailExpansion
from src.errors import EquivalenceError, IntegralityError, InvalidInputError, InvariantViolation
from src.recurrence import RecurrenceSetup, initial_state, run, scaled_factor
from src.recurrence.polys import poly_eval
from src.siegel import SiegelProblem, SiegelSolution, integer_norm_ceiling, solve


def tail_coefficient(table: CoeffTable, d: int) -> int:
    """𝔄_d = (-1)^d sum_{i<=min(a,d)} sum_j (-1)^i C(d-1, i-1) j^{d-i} c_{i,j}, with 0^0 = 1."""
    if d < 1:
        raise InvalidInputError(f"d must be >= 1, got {d}")
    total = 0
    for i in range(1, min(table.a, d) + 1):
        binom = comb(d - 1, i - 1)
        inner = sum(table.entry(i, j) * j ** (d - i) for j in range(table.n + 1))
        total += (-1) ** i * binom * inner
    return (-1) ** d * total


def tail_expansion(table: CoeffTable, D: int) -> TailExpansion:
    return TailExpansion(tuple(tail_coefficient(table, d) for d in range(1, D + 1)))


def tail_row(a: int, n: int, d: int) -> List[int]:
    """Coefficients of 𝔄_d as a linear form in the columns (i', j')."""
    row = []
    for i in range(1, a + 1):
        for j in range(n + 1):
            if i > d:
                row.append(0)
            else:
                row.append((-1) ** (d + i) * comb(d - 1, i - 1) * j ** (d - i))
    return row


def values_at_one(setup: RecurrenceSetup, rows: List[List[int]], k_max: int) -> List[Fraction]:
    """P_{k,1}(1) for k = 1..k_max."""
    values: List[Fraction] = []
    if k_max < 1:
        return values
    for state in run(initial_state(rows, setup.alpha), k_max, upper_only=True):
        values.append(poly_eval(state.row(1).numerator, 1))
    return values


def _column_values(args: Tuple[int, int, int, int, int]) -> List[Fraction]:
    a, n, i_, j_, k_max = args
    rows = [[0] * (n + 1) for _ in range(a)]
    rows[i_ - 1][j_] = 1
    return values_at_one(RecurrenceSetup(a, n), rows, k_max)


def vanishing_system(
    params: Params, weighted: bool = False, max_workers: int = 1
) -> SiegelProblem:
    """Equality rows k = 1..ωn-1 and, optionally, weighted rows ωn <= d < Ωn.

    Entry (k, (i', j')) is δ_k/(k-1)! sum_j θ_{k,1,j,i',j'}, read off unit-table
    recurrences; weighted rows are the 𝔄_d forms with G_d = r^{Ωn-d} and
    H_d = sqrt(a(n+1)) d^a n^d.

    Args:
        params: Validated parameters
        weighted: Append the weighted rows
        max_workers: Processes used for the column recurrences

    Returns:
        The assembled problem

    Raises:
        IntegralityError: If a scaled entry is not an integer
        InvariantViolation: If an entry exceeds (n+1) k^a 2^n δ_k
    """
    a, n, M0 = params.a, params.n, params.equations
    columns = [(a, n, i_, j_, M0) for i_ in range(1, a + 1) for j_ in range(n + 1)]
    if max_workers > 1 and M0 > 0:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            raw = list(pool.map(_column_values, columns))
    else:
        raw = [_column_values(column) for column in columns]

    lam: List[List[int]] = []
    for k in range(1, M0 + 1):
        factor = scaled_factor(k, a, n)
        bound = (n + 1) * k**a * 2**n * factor * factorial(k - 1)
        row = []
        for column, values in zip(columns, raw):
            entry = factor * values[k - 1]
            if entry.denominator != 1:
                raise IntegralityError(
                    "scaled vanishing-system entry is not an integer",
                    index=(k, column[2], column[3]),
                    observed=entry,
                )
            if abs(entry) > bound:
                raise InvariantViolation(
                    "vanishing-system entry exceeds its bound",
                    index=(k, column[2], column[3]),
                    observed=entry,
                )
            row.append(entry.numerator)
        lam.append(row)

    H: List[Any] = []
    G: List[Any] = []
    if weighted:
        H = [max(1, integer_norm_ceiling(row)) for row in lam]
        with mpmath.workdps(60):
            scale = mpmath.sqrt(params.unknowns)
            for d in range(params.omega_n, params.big_omega_n):
                lam.append(tail_row(a, n, d))
                H.append(scale * mpmath.mpf(d) ** a * mpmath.mpf(n) ** d)
                r = params.r
                G.append((mpmath.mpf(r.numerator) / r.denominator) ** (params.big_omega_n - d))

    logger.info(
        f"vanishing system assembled: {M0} equality rows, {len(lam) - M0} weighted rows, "
        f"{params.unknowns} unknowns"
    )
    return SiegelProblem.build(lam, M0, H=H, G=G, N=params.unknowns)


def chi(params: Params) -> mpmath.mpf:
    """χ = exp((ω log 2 + 3ω² + ω² log(a+1) + Ω² log(r)/2) / (a - ω))."""
    w = mpmath.mpf(params.omega.numerator) / params.omega.denominator
    W = mpmath.mpf(params.big_omega.numerator) / params.big_omega.denominator
    r = mpmath.mpf(params.r.numerator) / params.r.denominator
    a = params.a
    exponent = w * mpmath.log(2) + 3 * w**2 + w**2 * mpmath.log(a + 1) + W**2 * mpmath.log(r) / 2
    return mpmath.exp(exponent / (a - w))


@dataclass
class ConstructionReport:
    """Measured sizes of one construction against the asymptotic predictions."""

    backend: str
    X: float
    sup_norm: int
    within_bounds: bool
    log_max_c_over_n: float
    log_chi: float
    tail_magnitudes: Dict[int, int] = field(default_factory=dict)
    tail_bound_log_ratios: Dict[int, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "backend": self.backend,
            "X": self.X,
            "sup_norm": str(self.sup_norm),
            "within_bounds": self.within_bounds,
            "log_max_c_over_n": self.log_max_c_over_n,
            "log_chi": self.log_chi,
            "tail_magnitudes": {str(d): str(v) for d, v in self.tail_magnitudes.items()},
            "tail_bound_log_ratios": {str(d): v for d, v in self.tail_bound_log_ratios.items()},
        }


@dataclass
class Construction:
    table: CoeffTable
    tail: TailExpansion
    report: ConstructionReport
    solution: SiegelSolution


def _report(
    params: Params, table: CoeffTable, tail: TailExpansion, solution: SiegelSolution
) -> ConstructionReport:
    n = params.n
    log_chi = float(mpmath.log(chi(params)))
    magnitudes: Dict[int, int] = {}
    ratios: Dict[int, float] = {}
    log_r = float(mpmath.log(mpmath.mpf(params.r.numerator) / params.r.denominator))
    for d in range(params.omega_n, tail.D + 1):
        value = abs(tail[d])
        magnitudes[d] = value
        if value:
            bound = (
                (d - params.big_omega_n) * log_r
                + d * float(mpmath.log(n))
                + params.a * float(mpmath.log(d))
                + n * log_chi
            )
            ratios[d] = float(mpmath.log(value)) - bound
    log_max = float(mpmath.log(table.max_abs()))
    report = ConstructionReport(
        backend=solution.backend,
        X=float(solution.X),
        sup_norm=solution.sup_norm,
        within_bounds=solution.within_bounds,
        log_max_c_over_n=log_max / n,
        log_chi=log_chi,
        tail_magnitudes=magnitudes,
        tail_bound_log_ratios=ratios,
    )
    if log_max > n * log_chi:
        logger.warning(
            f"max|c| = e^{log_max:.3f} exceeds chi^n = e^{n * log_chi:.3f} at n={n}"
        )
    return report


def build_Fn(
    params: Params, backend: str = "auto", weighted: bool = False, max_workers: int = 1
) -> Construction:
    """Nonzero table with F_n(t) = O(t^{-ωn}), checked through 𝔄_d and through P_{k,1}(1).

    Args:
        params: Validated parameters
        backend: Siegel backend
        weighted: Include the weighted rows ωn <= d < Ωn
        max_workers: Processes used while assembling the system

    Returns:
        Table, tail 𝔄_1..𝔄_{3ωn}, report and the raw solver output

    Raises:
        InvariantViolation: If either vanishing check fails
        SiegelError: If the system admits no nonzero solution
    """
    logger.info(f"building F_n for {params.describe()}")
    problem = vanishing_system(params, weighted=weighted, max_workers=max_workers)
    solution = solve(problem, backend=backend)
    table = CoeffTable.from_vector(solution.x, params.a, params.n)

    omega_n = params.omega_n
    tail = tail_expansion(table, 3 * omega_n)
    for d in range(1, omega_n):
        if tail[d]:
            raise InvariantViolation(
                "tail coefficient does not vanish", index=(d,), observed=tail[d]
            )
    values = values_at_one(params.recurrence_setup(), table.rows(), omega_n - 1)
    for k, value in enumerate(values, 1):
        if value:
            raise InvariantViolation("P_{k,1}(1) does not vanish", index=(k,), observed=value)

    report = _report(params, table, tail, solution)
    logger.success(
        f"F_n built: b={table.b}, max|c|={table.max_abs()}, first nonzero tail index "
        f"{tail.first_nonzero()}"
    )
    return Construction(table, tail, report, solution)


def remainder_series(
    table: CoeffTable, z: Fraction, precision: int = 50, D: Optional[int] = None
) -> Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]:
    """R_n(z) from the P_i and from the 𝔄_d series in log z.

    R_n(z) = sum_i P_i(z) (-1)^{i-1} (log z)^{i-1} / (i-1)! and
    R_n(z) = sum_d 𝔄_d (-1)^{d-1} (log z)^{d-1} / (d-1)! for |z - 1| < 1.
    The series is truncated once the terms S d^{a-1} n^d L^{d-1} / (d-1)! (S = sum |c|,
    L = |log z|) halve at every step and fall below 10^{-(precision+10)}.

    Returns:
        (direct value, truncated series, certified tail bound)
    """
    z = Fraction(z)
    if not 0 < z < 2:
        raise InvalidInputError(f"need |z - 1| < 1 on the real line, got {z}")
    a, n = table.a, max(table.n, 1)
    S = sum(abs(v) for row in table.c for v in row)

    with mpmath.workdps(precision + 20):
        zf = mpmath.mpf(z.numerator) / z.denominator
        L = mpmath.log(zf)
        direct = mpmath.mpf(0)
        for i in range(1, a + 1):
            value = poly_eval(table.c[i - 1], z)
            direct += (
                mpmath.mpf(value.numerator) / value.denominator
                * (-L) ** (i - 1)
                / mpmath.factorial(i - 1)
            )

        def bound_term(d: int) -> mpmath.mpf:
            return S * mpmath.mpf(d) ** (a - 1) * mpmath.mpf(n) ** d * abs(L) ** (d - 1) / (
                mpmath.factorial(d - 1)
            )

        target = mpmath.mpf(10) ** (-(precision + 10))
        if D is None:
            D = 1
            while True:
                ratio = (mpmath.mpf(D + 1) / D) ** (a - 1) * n * abs(L) / D
                if ratio <= mpmath.mpf(1) / 2 and 2 * bound_term(D + 1) <= target:
                    break
                D += 1
        series = mpmath.mpf(0)
        for d in range(1, D + 1):
            coefficient = tail_coefficient(table, d)
            if coefficient:
                series += coefficient * (-L) ** (d - 1) / mpmath.factorial(d - 1)
        tail_bound = 2 * bound_term(D + 1) if S else mpmath.mpf(0)
    logger.debug(f"remainder series truncated at D={D}")
    return direct, series, tail_bound


@dataclass
class EquivalenceReport:
    first_tail_index: Optional[int]
    first_value_index: Optional[int]
    cap: int
    residual: float
    tail_bound: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "D1": self.first_tail_index,
            "D2": self.first_value_index,
            "cap": self.cap,
            "residual": f"{self.residual:.3e}",
            "tail_bound": f"{self.tail_bound:.3e}",
        }


def verify_equivalences(
    table: CoeffTable,
    params: Optional[Params] = None,
    cap: Optional[int] = None,
    precision: int = 50,
    z: Fraction = Fraction(3, 2),
) -> EquivalenceReport:
    """First nonvanishing index of 𝔄_d against that of P_{k,1}(1), plus the R_n(z) cross-check.

    Both indices are scanned up to ``cap`` (3ωn from ``params`` by default, else 3(a+n)).

    Raises:
        EquivalenceError: If the indices differ or the residual exceeds 10^{-(precision-10)}
    """
    if cap is None:
        cap = 3 * params.omega_n if params is not None else 3 * (table.a + table.n)
    tail = tail_expansion(table, cap)
    d1 = tail.first_nonzero()
    values = values_at_one(RecurrenceSetup(table.a, table.n), table.rows(), cap)
    d2 = next((k for k, v in enumerate(values, start=1) if v), None)
    if d1 != d2:
        raise EquivalenceError("first nonvanishing indices differ", index=(d1, d2), observed=cap)

    direct, series, tail_bound = remainder_series(table, z, precision)
    with mpmath.workdps(precision + 20):
        residual = abs(direct - series) + tail_bound
        if residual >= mpmath.mpf(10) ** (-(precision - 10)):
            raise EquivalenceError(
                "remainder series does not match R_n", index=(str(z),), observed=residual
            )
    logger.success(f"equivalences hold: D1 = D2 = {d1} (cap {cap})")
    return EquivalenceReport(d1, d2, cap, float(residual), float(tail_bound))
