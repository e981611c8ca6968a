"""Asymptotic constants, dimension bounds and growth sweeps."""

from src.report.constants import (
    POLYLOG_DEFAULTS,
    ZETA_DEFAULTS,
    AsymptoticConstants,
    asymptotic_constants,
    dimension_bound,
    feasibility_check,
    finite_constants,
)
from src.report.growth import GrowthSweep, SweepResults, measured_growth, sweep, sweep_row

__all__ = [
    "AsymptoticConstants",
    "asymptotic_constants",
    "feasibility_check",
    "dimension_bound",
    "finite_constants",
    "ZETA_DEFAULTS",
    "POLYLOG_DEFAULTS",
    "measured_growth",
    "sweep_row",
    "sweep",
    "GrowthSweep",
    "SweepResults",
]
