"""Large-a limits of the growth constants and the dimension bound they imply."""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Union

import mpmath

from src.construct import Mode, Params, parse_rational
from src.errors import InvalidInputError
from src.evaluate import GrowthConstants, growth_constants

Number = Union[int, float, str, Fraction]

# parameter sets of the two headline results
ZETA_DEFAULTS = {"r": 3.9, "kappa": 10.58, "omega": 11.58, "omega_coef": 3.9, "h_frac": 0.36}
POLYLOG_DEFAULTS = {
    "r": 5.3,
    "kappa": 8.8343,
    "omega": 9.8343,
    "omega_coef": 3.3,
    "h_frac": 0.3946,
}


@dataclass(frozen=True)
class AsymptoticConstants:
    """Coefficients of log a (χ, β), of -sqrt(a log a) (α) and of sqrt(a / log a) (τ).

    ``logalpha_s_coef`` is the α coefficient renormalised to s = a + h.
    """

    mode: str
    logchi_coef: float
    logbeta_coef: float
    logalpha_coef: float
    tau_ratio_coef: float
    shrink_factor: float
    final_coef: float
    logalpha_s_coef: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def asymptotic_constants(
    r: float,
    kappa: float,
    omega: float,
    omega_coef: float,
    h_frac: float,
    mode: Union[str, Mode] = Mode.ZETA,
) -> AsymptoticConstants:
    """Limit coefficients as a -> ∞ with Ω = Ω_coef sqrt(a log a) and h = h_frac a.

    log χ ~ ½ Ω_coef² log r · log a, log β ~ (log χ coefficient + κ) log a,
    log α ~ -Ω_coef log r · sqrt(a log a); the bound τ rescales to a + h through
    sqrt(1 / (1 + h_frac)).
    """
    mode = Mode(mode)
    if min(r, kappa, omega, omega_coef) <= 0 or h_frac < 0:
        raise InvalidInputError("asymptotic constants need positive parameters")
    with mpmath.workdps(30):
        log_r = mpmath.log(r)
        logchi = omega_coef**2 * log_r / 2
        logbeta = logchi + kappa
        logalpha = omega_coef * log_r
        shrink = mpmath.sqrt(1 / (1 + mpmath.mpf(h_frac)))
        tau = logalpha / logbeta
        return AsymptoticConstants(
            mode=mode.value,
            logchi_coef=float(logchi),
            logbeta_coef=float(logbeta),
            logalpha_coef=float(logalpha),
            tau_ratio_coef=float(tau),
            shrink_factor=float(shrink),
            final_coef=float(tau * shrink),
            logalpha_s_coef=float(logalpha * shrink),
        )


def feasibility_check(
    r: Number,
    kappa: Number,
    omega: Number,
    h: Number,
    a: Number,
    mode: Union[str, Mode] = Mode.ZETA,
) -> bool:
    """(h+1)(κ-2r) + ω > a (zeta) or (h+1)(κ-r-1) + ω > a (polylog), in exact rationals."""
    r, kappa, omega, h, a = (parse_rational(v) for v in (r, kappa, omega, h, a))
    if Mode(mode) is Mode.ZETA:
        return (h + 1) * (kappa - 2 * r) + omega > a
    return (h + 1) * (kappa - r - 1) + omega > a


def dimension_bound(
    log_alpha: Number, log_beta: Number, degree: int = 1, real_embedding: bool = True
) -> Fraction:
    """([K_∞ : R] / [K : Q]) (τ + 1) with τ = -log α / log β.

    Raises:
        InvalidInputError: If log β <= 0 or degree < 1
    """
    log_alpha, log_beta = parse_rational(log_alpha), parse_rational(log_beta)
    if log_beta <= 0:
        raise InvalidInputError(f"log beta must be positive, got {log_beta}")
    if degree < 1:
        raise InvalidInputError(f"degree must be >= 1, got {degree}")
    tau = -log_alpha / log_beta
    return Fraction(1 if real_embedding else 2, degree) * (tau + 1)


def finite_constants(params: Params) -> GrowthConstants:
    """log χ, log β and log α0 (or log α1) for one finite instance."""
    return growth_constants(params)
