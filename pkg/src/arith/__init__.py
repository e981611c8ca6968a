"""Exact prime-valuation arithmetic: d_N, Δ_{a,N} and binomial lcm."""

from src.arith.factored import FactoredInt
from src.arith.lcm import (
    binomial_lcm,
    delta,
    delta_bruteforce,
    delta_log_bound,
    lcm_range,
)

__all__ = [
    "FactoredInt",
    "lcm_range",
    "delta",
    "delta_bruteforce",
    "delta_log_bound",
    "binomial_lcm",
]
