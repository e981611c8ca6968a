"""Construction of the rational function F_n and its tail expansion."""

from src.construct.builder import (
    Construction,
    ConstructionReport,
    EquivalenceReport,
    build_Fn,
    chi,
    remainder_series,
    tail_coefficient,
    tail_expansion,
    tail_row,
    values_at_one,
    vanishing_system,
    verify_equivalences,
)
from src.construct.params import Mode, Params, parse_rational
from src.construct.table import CoeffTable, TailExpansion

__all__ = [
    "Params",
    "Mode",
    "parse_rational",
    "CoeffTable",
    "TailExpansion",
    "tail_coefficient",
    "tail_expansion",
    "tail_row",
    "values_at_one",
    "vanishing_system",
    "build_Fn",
    "Construction",
    "ConstructionReport",
    "chi",
    "remainder_series",
    "verify_equivalences",
    "EquivalenceReport",
]
