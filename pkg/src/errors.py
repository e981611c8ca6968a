"""Exception hierarchy shared by the library and the CLI."""

from typing import Any, Optional, Tuple


class ZetaFormsError(Exception):
    """Base class for every error raised by the package."""


class InvalidInputError(ZetaFormsError, ValueError):
    """Arguments outside the documented domain."""


class RangeGuardError(InvalidInputError):
    """Input beyond the size guard of an exhaustive oracle."""


class WindowError(InvalidInputError):
    """Index k (or p) outside the admissible window for a linear form."""


class DivergenceError(InvalidInputError):
    """The termwise-differentiated series does not converge for these indices."""


class DimensionError(InvalidInputError):
    """Matrix or selection shapes do not match."""


class InvariantViolation(ZetaFormsError):
    """A mathematical invariant failed on concrete data.

    Attributes:
        index: Tuple naming the offending entry (e.g. ``(k, i, j, i', j')``)
        observed: The value that broke the invariant
    """

    def __init__(
        self, message: str, index: Optional[Tuple[Any, ...]] = None, observed: Any = None
    ):
        super().__init__(message if index is None else f"{message} at index {index}")
        self.index = index
        self.observed = observed


class IntegralityError(InvariantViolation):
    """A value expected to be a rational integer has a denominator."""


class IdentityViolation(InvariantViolation):
    """A verified identity produced a residual enclosure excluding zero."""


class EquivalenceError(InvariantViolation):
    """The first non-vanishing indices of two equivalent criteria differ."""


class SiegelError(ZetaFormsError):
    """The integer system has no nonzero solution."""
