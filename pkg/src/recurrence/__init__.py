"""Differentiation recurrences, θ tables and the denominators δ_k."""

from src.recurrence.denominators import (
    IntegralityReport,
    denominator,
    integrality_report,
    scaled_factor,
)
from src.recurrence.engine import (
    POLYLOG_ALPHA,
    ZETA_ALPHA,
    RecurrenceSetup,
    RecurrenceState,
    advance,
    as_setup,
    initial_state,
    psi,
    run,
    step,
)
from src.recurrence.polys import ShiftedPoly
from src.recurrence.theta import (
    ThetaDiscrepancy,
    ThetaTable,
    compare_theta,
    theta_closed,
    theta_oracle,
    theta_table,
)

__all__ = [
    "ShiftedPoly",
    "RecurrenceSetup",
    "RecurrenceState",
    "ZETA_ALPHA",
    "POLYLOG_ALPHA",
    "as_setup",
    "initial_state",
    "step",
    "run",
    "advance",
    "psi",
    "ThetaTable",
    "ThetaDiscrepancy",
    "theta_oracle",
    "theta_closed",
    "theta_table",
    "compare_theta",
    "denominator",
    "scaled_factor",
    "integrality_report",
    "IntegralityReport",
]
