"""Finite-a growth constants β (coefficients) and α0 / α1 (form sizes)."""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict

import mpmath

from src.construct import Mode, Params, chi


def _mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


@dataclass(frozen=True)
class GrowthConstants:
    """Natural logarithms of χ, β and the smallness constant of the forms."""

    log_chi: float
    log_beta: float
    log_alpha0: float
    log_alpha: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def growth_constants(params: Params) -> GrowthConstants:
    """β = χ (8e³(2a+1))^κ (q max(1, |z0|, |1-z0|))^{κ+r+1}.

    Zeta mode: α0 = χ r^{-Ω} (e⁴(2a+1))^κ and α = 2^κ α0.
    Polylog mode: α0 = α = χ r^{-Ω} q^{r+1} (e⁴(2a+1) q |z0(1-z0)|)^κ.
    """
    with mpmath.workdps(30):
        a = params.a
        kappa, r, W = _mpf(params.kappa), _mpf(params.r), _mpf(params.big_omega)
        log_chi = mpmath.log(chi(params))
        z0 = params.z0
        house = max(Fraction(1), abs(z0), abs(1 - z0))
        log_beta = (
            log_chi
            + kappa * mpmath.log(8 * mpmath.e**3 * (2 * a + 1))
            + (kappa + r + 1) * mpmath.log(params.q * _mpf(house))
        )
        base = log_chi - W * mpmath.log(r)
        if params.mode is Mode.ZETA:
            log_alpha0 = base + kappa * mpmath.log(mpmath.e**4 * (2 * a + 1))
            log_alpha = log_alpha0 + kappa * mpmath.log(2)
        else:
            log_alpha0 = (
                base
                + (r + 1) * mpmath.log(params.q)
                + kappa
                * mpmath.log(mpmath.e**4 * (2 * a + 1) * params.q * _mpf(abs(z0 * (1 - z0))))
            )
            log_alpha = log_alpha0
        return GrowthConstants(float(log_chi), float(log_beta), float(log_alpha0), float(log_alpha))
