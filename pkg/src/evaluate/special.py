"""Certified ζ(s) and Li_s(x) at rational points."""

from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial
from typing import Union

import mpmath
from loguru import logger
from sympy.functions.combinatorial.numbers import stirling

from src.errors import InvalidInputError
from src.evaluate.ball import BallReal

GUARD_DIGITS = 10
# log10(3 + sqrt(8)), the convergence rate of the alternating-series scheme
_ETA_RATE = 0.765


def _eta_terms(precision: int) -> int:
    return ceil((precision + 3) / _ETA_RATE)


@lru_cache(maxsize=None)
def _eta_sum(s: int, m: int) -> Fraction:
    """Exact alternating-series approximation of η(s) with m terms."""
    d = []
    partial = Fraction(0)
    for i in range(m + 1):
        partial += Fraction(factorial(m + i - 1) * 4**i, factorial(m - i) * factorial(2 * i))
        d.append(m * partial)
    total = sum(
        Fraction((-1) ** k) * (d[k] - d[m]) / Fraction(k + 1) ** s for k in range(m)
    )
    return -total / d[m]


def eta(s: int, precision: int) -> BallReal:
    """Dirichlet η(s) = sum_{t>=1} (-1)^{t-1} / t^s for s >= 1, radius <= 10^{-precision}/2."""
    if s < 1:
        raise InvalidInputError(f"eta needs s >= 1, got {s}")
    m = _eta_terms(precision)
    with mpmath.workdps(precision + GUARD_DIGITS):
        if s == 1:
            return BallReal.around(mpmath.log(2), mpmath.mpf(10) ** (-(precision + 5)))
        # |error| <= 3 / (3 + sqrt 8)^m
        truncation = 3 / (3 + mpmath.sqrt(8)) ** m
        return BallReal.around(_as_mpf(_eta_sum(s, m)), truncation)


def zeta(s: int, precision: int) -> BallReal:
    """ζ(s) = η(s) / (1 - 2^{1-s}) with radius <= 10^{-precision}.

    Raises:
        InvalidInputError: If s < 2
    """
    if s < 2:
        raise InvalidInputError(f"zeta needs an integer s >= 2, got {s}")
    with mpmath.workdps(precision + GUARD_DIGITS):
        value = eta(s, precision + 1) * BallReal.exact(Fraction(2 ** (s - 1), 2 ** (s - 1) - 1))
    logger.debug(f"zeta({s}) at {precision} digits: radius {mpmath.nstr(value.rad, 3)}")
    return value


def _as_mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def polylog_negative(m: int, x: Union[int, Fraction]) -> Fraction:
    """Li_{-m}(x) = sum_{k<=m} k! S(m+1, k+1) (x / (1-x))^{k+1}, exactly, for m >= 0 and x != 1."""
    x = Fraction(x)
    if m < 0:
        raise InvalidInputError(f"polylog_negative needs m >= 0, got {m}")
    if x == 1:
        raise InvalidInputError("Li_{-m} has a pole at x = 1")
    u = x / (1 - x)
    return sum(
        (factorial(k) * int(stirling(m + 1, k + 1)) * u ** (k + 1) for k in range(m + 1)),
        Fraction(0),
    )


def _geometric_terms(x: Fraction, s: int, precision: int) -> int:
    """Smallest T with |x|^{T+1} / ((T+1)^s (1-|x|)) below 10^{-(precision+GUARD_DIGITS)}."""
    ax = abs(x)
    with mpmath.workdps(30):
        target = mpmath.mpf(10) ** (-(precision + GUARD_DIGITS)) * (1 - _as_mpf(ax))
        T = int(mpmath.ceil(mpmath.log(target) / mpmath.log(_as_mpf(ax))))
    return max(T, 1)


def polylog(s: int, x: Union[int, Fraction], precision: int) -> BallReal:
    """Li_s(x) = sum_{t>=1} x^t / t^s for s >= 1 and rational |x| <= 1.

    Li_s(1) = ζ(s) (s >= 2) and Li_s(-1) = -η(s); for |x| < 1 the sum is truncated
    with the tail bounded by |x|^{T+1} / ((T+1)^s (1 - |x|)).

    Raises:
        InvalidInputError: Outside the domain (|x| > 1, or x = 1 with s = 1)
    """
    x = Fraction(x)
    if s < 1:
        raise InvalidInputError(f"polylog needs s >= 1, got {s}; use polylog_negative")
    if abs(x) > 1:
        raise InvalidInputError(f"polylog series diverges at x = {x}")
    if x == 1:
        if s == 1:
            raise InvalidInputError("Li_1 has a pole at x = 1")
        return zeta(s, precision)
    if x == -1:
        return -eta(s, precision)
    if x == 0:
        return BallReal.zero()

    T = _geometric_terms(x, s, precision)
    partial = sum((x**t / Fraction(t) ** s for t in range(1, T + 1)), Fraction(0))
    with mpmath.workdps(precision + GUARD_DIGITS):
        ax = _as_mpf(abs(x))
        tail = ax ** (T + 1) / (mpmath.mpf(T + 1) ** s * (1 - ax))
        value = BallReal.around(_as_mpf(partial), tail)
    logger.debug(f"Li_{s}({x}) summed with {T} terms")
    return value
