"""Composition sets H_{l,k}, the kernel κ(T,k,h) and factorial-type products."""

from src.combinatorics.compositions import (
    Composition,
    compositions,
    falling,
    kappa,
    kappa_sum,
    pochhammer,
)

__all__ = ["Composition", "compositions", "kappa", "kappa_sum", "pochhammer", "falling"]
