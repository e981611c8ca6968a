"""Linear forms ℓ_{p,k,i} and the identity they satisfy with the differentiated series."""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

import mpmath
from loguru import logger

from src.combinatorics import falling, pochhammer
from src.construct import CoeffTable, Mode, Params
from src.errors import (
    DivergenceError,
    IdentityViolation,
    IntegralityError,
    InvalidInputError,
    InvariantViolation,
    WindowError,
)
from src.evaluate.ball import BallReal
from src.evaluate.special import GUARD_DIGITS, polylog, polylog_negative
from src.recurrence import RecurrenceState, advance, denominator, initial_state
from src.recurrence.polys import Coeffs, degree, poly_mul, trim

# (argument, weight s) -> exact coefficient of Li_s(argument)
LiCoefficients = Dict[Tuple[Fraction, int], Fraction]


def vp_polynomials(table: CoeffTable, p: int, params: Params) -> Tuple[Coeffs, Coeffs]:
    """V_p^{[∞]} and V_p^{[0]}, the polynomial parts of S^{[∞]}_{n,p} and S^{[0]}_{n,p}.

    V^{[∞]} = -sum c_{i,j} (-1)^p (i)_p sum_{t=0}^{rn+j-1} z^t / (rn+j-t)^{i+p}
    V^{[0]} = -sum c_{i,j} (-1)^i (i)_p sum_{t=rn+j+1}^{2rn} z^t / (t-rn-j)^{i+p}
    """
    rn = params.rn
    inf = [Fraction(0)] * (rn + table.n)
    zero = [Fraction(0)] * (2 * rn + 1)
    for i in range(1, table.a + 1):
        weight = pochhammer(i, p)
        for j in range(table.n + 1):
            c = table.entry(i, j)
            if not c:
                continue
            for t in range(rn + j):
                inf[t] -= Fraction(c * (-1) ** p * weight, (rn + j - t) ** (i + p))
            for t in range(rn + j + 1, 2 * rn + 1):
                zero[t] -= Fraction(c * (-1) ** i * weight, (t - rn - j) ** (i + p))
    v_inf, v_zero = trim(inf), trim(zero)
    if degree(v_inf) > (params.r + 1) * params.n - 1:
        raise InvariantViolation("deg V^[inf] too large", index=(p,), observed=degree(v_inf))
    if degree(v_zero) > 2 * rn or any(v_zero[: rn + 1]):
        raise InvariantViolation("V^[0] is not a multiple of z^{rn+1} of degree <= 2rn", index=(p,))
    return v_inf, v_zero


def check_pair(params: Params, p: int, k: int) -> None:
    low, high = params.admissible_window()
    if not 0 <= p <= params.h:
        raise WindowError(f"p={p} outside 0..h={params.h}")
    if not low <= k <= high:
        raise WindowError(f"k={k} outside the admissible window [{low}, {high}]")


def form_scale(params: Params, k: int) -> Fraction:
    """q^{(r+1)n+k-1} z0^{k-1} (1-z0)^{k-1} δ_k / (k-1)!.

    δ_k is taken for a+h rows of degree (r+1)n.
    """
    z0, q = params.z0, params.q
    size = params.rn + params.n
    delta_k = denominator(k, params.a + params.h, size).value
    return Fraction(q ** (size + k - 1)) * (z0 * (1 - z0)) ** (k - 1) * Fraction(
        delta_k, factorial(k - 1)
    )


def q_state(table: CoeffTable, params: Params, p: int, k: int) -> RecurrenceState:
    """Level-k state of the Q^{[p]} recurrence."""
    start = initial_state(
        table.rows(), params.alpha, total_rows=params.a + params.h, shift=params.rn, p=p
    )
    return advance(start, k)


def form_coefficients(table: CoeffTable, params: Params, p: int, k: int) -> Tuple[int, ...]:
    """ℓ_{p,k,0..a+h} = scale_k Q^{[p]}_{k,i}(z0).

    Raises:
        WindowError: If (p, k) is not admissible
        IntegralityError: If some ℓ_{p,k,i} is not an integer
    """
    check_pair(params, p, k)
    if table.a != params.a or table.n != params.n:
        raise InvalidInputError("table shape does not match params")
    scale = form_scale(params, k)
    state = q_state(table, params, p, k)
    ell: List[int] = []
    for i in range(params.a + params.h + 1):
        value = scale * state.row(i).evaluate(params.z0)
        if value.denominator != 1:
            raise IntegralityError(
                "linear-form coefficient is not an integer", index=(p, k, i), observed=value
            )
        ell.append(value.numerator)
    for i in range(params.a + p + 1, len(ell)):
        if ell[i]:
            raise InvariantViolation(
                "coefficient beyond a+p does not vanish", index=(p, k, i), observed=ell[i]
            )
    logger.debug(f"l_(p={p}, k={k}) computed, max |l| has {len(str(max(map(abs, ell))))} digits")
    return tuple(ell)


def _descending_product(offset: int, sign: int, k: int) -> Coeffs:
    """Coefficients in u of prod_{m=0}^{k-2} (offset + sign*u - m)."""
    poly: Coeffs = (Fraction(1),)
    for m in range(k - 1):
        poly = poly_mul(poly, (offset - m, sign))
    return poly


def _regularised_tail(
    x: Fraction, s: int, u0: int, weight: Fraction, rational: List[Fraction], li: LiCoefficients
) -> None:
    """Add weight * (Li_s(x) - sum_{u<u0} x^u / u^s) to the running decomposition."""
    head = sum((x**u * Fraction(u) ** (-s) for u in range(1, u0)), Fraction(0))
    if s <= 0:
        rational[0] += weight * (polylog_negative(-s, x) - head)
    else:
        rational[0] -= weight * head
        li[(x, s)] += weight


def closed_decomposition(
    table: CoeffTable, params: Params, p: int, k: int
) -> Tuple[Fraction, LiCoefficients]:
    """S^{(k-1)}(z0) as R + sum A_s Li_s(x) with exact R and A_s (before scaling).

    Each partial-fraction component of the differentiated series is a shifted
    polylogarithmic tail; non-positive weights are summed in closed form.
    In zeta mode this is S^{[∞]} - S^{[0]}, in polylog mode S^{[∞]} alone.
    """
    z0, rn = params.z0, params.rn
    rational = [Fraction(0)]
    li: LiCoefficients = defaultdict(Fraction)
    for i in range(1, table.a + 1):
        weight = (-1) ** p * pochhammer(i, p)
        for j in range(table.n + 1):
            c = table.entry(i, j)
            if not c:
                continue
            outer = Fraction(c * weight) * z0 ** (rn + j - k + 1)
            upper = _descending_product(rn + j, -1, k)
            for e, b in enumerate(upper):
                if b:
                    _regularised_tail(1 / z0, i + p - e, rn + 1 + j, outer * b, rational, li)
            if params.mode is Mode.ZETA:
                lower = _descending_product(rn + j, 1, k)
                sign = (-1) ** (i + p)
                for e, b in enumerate(lower):
                    if b:
                        _regularised_tail(
                            z0, i + p - e, rn + 1 - j, -sign * outer * b, rational, li
                        )
    return rational[0], {key: v for key, v in li.items() if v}


def _rhs_decomposition(ell: Tuple[int, ...], params: Params) -> Tuple[Fraction, LiCoefficients]:
    li: LiCoefficients = {}
    for i, value in enumerate(ell[1:], start=1):
        if params.mode is Mode.ZETA:
            coefficient = Fraction(value * (1 - (-1) ** i))
            key = (Fraction(-1), i)
        else:
            coefficient = Fraction(value)
            key = (1 / params.z0, i)
        if coefficient:
            li[key] = coefficient
    return Fraction(ell[0]), li


def _digits(value: Fraction) -> int:
    return len(str(abs(value.numerator) // value.denominator + 1))


def _evaluate(rational: Fraction, li: LiCoefficients, precision: int) -> BallReal:
    """R + sum A Li_s(x) with a radius below 10^{-(precision+GUARD_DIGITS)}."""
    magnitude = abs(rational) + sum((abs(v) for v in li.values()), Fraction(0))
    working = precision + GUARD_DIGITS + _digits(magnitude)
    with mpmath.workdps(working + GUARD_DIGITS):
        total = BallReal.exact(rational)
        for (x, s), coefficient in sorted(li.items()):
            total = total + polylog(s, x, working) * BallReal.exact(coefficient)
    return total


def _check_convergence(params: Params, p: int, k: int) -> None:
    if abs(params.z0) == 1 and k >= params.omega_n + p:
        raise DivergenceError(
            f"termwise differentiated series diverges for k={k} >= "
            f"omega*n + p = {params.omega_n + p}"
        )


def _direct_tail(
    strength: Fraction, params: Params, k: int, T: int
) -> Optional[mpmath.mpf]:
    """Bound on sum_{t>T} S (t+k)^{k-1} |z0|^{rn-t-k+1}, None if the ratio is not yet < 1."""
    t = T + 1
    az = mpmath.mpf(abs(params.z0).numerator) / abs(params.z0).denominator
    ratio = (mpmath.mpf(t + k + 1) / (t + k)) ** (k - 1) / az
    if ratio >= 1:
        return None
    term = (
        mpmath.mpf(strength.numerator) / strength.denominator
        * mpmath.mpf(t + k) ** (k - 1)
        * az ** (params.rn - t - k + 1)
    )
    return term / (1 - ratio)


def _direct_partial(table: CoeffTable, params: Params, p: int, k: int, T: int) -> Fraction:
    z0, rn = params.z0, params.rn
    total = Fraction(0)
    for t in range(rn + 1, T + 1):
        value = Fraction(0)
        for i in range(1, table.a + 1):
            weight = (-1) ** p * pochhammer(i, p)
            for j in range(table.n + 1):
                c = table.entry(i, j)
                if c:
                    value += Fraction(c * weight, (t + j) ** (i + p))
        if value:
            total += value * falling(rn - t, k - 1) * z0 ** (rn - t - k + 1)
    return total


def series_lhs(
    table: CoeffTable,
    params: Params,
    p: int,
    k: int,
    precision: int = 60,
    method: str = "auto",
    truncation: Optional[int] = None,
) -> BallReal:
    """Certified enclosure of scale_k S^{(k-1)}_{n,p}(z0).

    Args:
        table: Coefficients of F_n
        params: Run parameters
        p: Derivative order of F_n
        k: Form index
        precision: Target radius 10^{-precision}
        method: "closed", "direct" (|z0| > 1 only) or "auto" (closed when |z0| = 1)
        truncation: Fixed last summed term for the direct method

    Raises:
        WindowError: If (p, k) is not admissible
        DivergenceError: If |z0| = 1 and k >= ωn + p
    """
    check_pair(params, p, k)
    _check_convergence(params, p, k)
    if table.is_zero():
        return BallReal.zero()
    if method == "auto":
        method = "closed" if abs(params.z0) == 1 else "direct"
    scale = form_scale(params, k)

    if method == "closed":
        rational, li = closed_decomposition(table, params, p, k)
        return _evaluate(scale * rational, {key: scale * v for key, v in li.items()}, precision)
    if method != "direct":
        raise InvalidInputError(f"unknown method {method!r}")
    if abs(params.z0) == 1:
        raise InvalidInputError("direct summation needs |z0| > 1")

    strength = abs(scale) * sum(
        abs(table.entry(i, j)) * pochhammer(i, p)
        for i in range(1, table.a + 1)
        for j in range(table.n + 1)
    )
    with mpmath.workdps(precision + GUARD_DIGITS):
        target = mpmath.mpf(10) ** (-(precision + GUARD_DIGITS))
        if truncation is None:
            T = params.rn + k
            while True:
                tail = _direct_tail(strength, params, k, T)
                if tail is not None and tail < target:
                    break
                T *= 2
        else:
            T = truncation
            tail = _direct_tail(strength, params, k, T)
            if tail is None:
                raise InvalidInputError(f"truncation {T} is too small for a certified tail")
    partial = scale * _direct_partial(table, params, p, k, T)
    logger.debug(f"direct series for (p={p}, k={k}) truncated at t={T}")
    with mpmath.workdps(precision + GUARD_DIGITS + _digits(partial)):
        return BallReal.around(mpmath.mpf(partial.numerator) / partial.denominator, tail)


@dataclass
class FormRecord:
    """One verified linear form."""

    p: int
    k: int
    z0: Fraction
    q: int
    ell: Tuple[int, ...]
    lhs: BallReal
    rhs: BallReal
    residual: BallReal
    coefficient_match: bool
    precision: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "k": self.k,
            "z0": str(self.z0),
            "q": self.q,
            "ell": [str(v) for v in self.ell],
            "lhs": self.lhs.to_json(self.precision),
            "rhs": self.rhs.to_json(self.precision),
            "residual": self.residual.to_json(5),
            "contains_zero": self.residual.contains_zero(),
            "coefficient_match": self.coefficient_match,
            "precision": self.precision,
        }


def verify_form(
    table: CoeffTable, params: Params, p: int, k: int, precision: int = 60, method: str = "auto"
) -> FormRecord:
    """Check scale_k S^{(k-1)}(z0) = ℓ0 + sum_i ℓ_i Λ_i numerically and coefficient-wise.

    Λ_i is (1 - (-1)^i) Li_i(-1) in zeta mode and Li_i(1/z0) in polylog mode.

    Raises:
        IdentityViolation: If the residual ball excludes 0 or is wider than 10^{-(precision-10)}
    """
    ell = form_coefficients(table, params, p, k)
    lhs = series_lhs(table, params, p, k, precision, method=method)
    rational, li = _rhs_decomposition(ell, params)
    rhs = _evaluate(rational, li, precision)

    scale = form_scale(params, k)
    if table.is_zero():
        match = not any(ell)
    else:
        closed_rational, closed_li = closed_decomposition(table, params, p, k)
        match = scale * closed_rational == rational and {
            key: scale * v for key, v in closed_li.items()
        } == li

    with mpmath.workdps(precision + 2 * GUARD_DIGITS):
        residual = lhs - rhs
        threshold = mpmath.mpf(10) ** (-(precision - GUARD_DIGITS))
        if not residual.contains_zero() or residual.rad >= threshold:
            raise IdentityViolation(
                "linear-form identity fails", index=(p, k), observed=residual.to_json(10)
            )
    if not match:
        logger.warning(f"coefficient comparison failed for (p={p}, k={k})")
    logger.success(f"form (p={p}, k={k}) verified, residual radius {mpmath.nstr(residual.rad, 3)}")
    return FormRecord(p, k, params.z0, params.q, ell, lhs, rhs, residual, match, precision)
