"""Certified values, linear forms and their verification."""

from src.evaluate.ball import BallReal
from src.evaluate.constants import GrowthConstants, growth_constants
from src.evaluate.forms import (
    FormRecord,
    check_pair,
    closed_decomposition,
    form_coefficients,
    form_scale,
    q_state,
    series_lhs,
    verify_form,
    vp_polynomials,
)
from src.evaluate.rank import RankReport, greedy_selection, rank_matrix
from src.evaluate.special import eta, polylog, polylog_negative, zeta

__all__ = [
    "BallReal",
    "zeta",
    "eta",
    "polylog",
    "polylog_negative",
    "vp_polynomials",
    "check_pair",
    "form_scale",
    "q_state",
    "form_coefficients",
    "closed_decomposition",
    "series_lhs",
    "verify_form",
    "FormRecord",
    "rank_matrix",
    "greedy_selection",
    "RankReport",
    "growth_constants",
    "GrowthConstants",
]
