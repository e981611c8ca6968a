"""Constructive Siegel lemma: small integer vectors in the kernel of an integer system."""

from src.siegel.lattice import enumerate_short, gram_schmidt, integer_kernel, lll_reduce
from src.siegel.problem import SiegelProblem, bound_X, integer_norm_ceiling
from src.siegel.solver import SiegelSolution, normalize_sign, solve

__all__ = [
    "SiegelProblem",
    "SiegelSolution",
    "bound_X",
    "solve",
    "integer_kernel",
    "lll_reduce",
    "gram_schmidt",
    "enumerate_short",
    "normalize_sign",
    "integer_norm_ceiling",
]
