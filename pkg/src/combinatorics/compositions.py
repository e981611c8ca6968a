"""Compositions of k into l+1 positive parts and the integer kernel κ."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, combinations
from typing import List, Optional, Tuple

from src.errors import IntegralityError, InvalidInputError


@dataclass(frozen=True)
class Composition:
    """Ordered positive parts (h_0, ..., h_l)."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(h < 1 for h in self.parts):
            raise InvalidInputError(f"composition parts must be positive, got {self.parts}")

    @property
    def length(self) -> int:
        """l, i.e. the number of parts minus one."""
        return len(self.parts) - 1

    @property
    def total(self) -> int:
        return sum(self.parts)

    def partial_sums(self) -> List[int]:
        """h_0, h_0 + h_1, ..., h_0 + ... + h_{l-1} (the last part is excluded)."""
        return list(accumulate(self.parts[:-1]))


def compositions(l: int, k: int) -> List[Composition]:
    """H_{l,k} in lexicographic order; empty when l >= k or l < 0."""
    if l < 0 or k < 1 or l >= k:
        return []
    result = []
    # choosing l cut points among 1..k-1 in increasing order gives lexicographic parts
    for cuts in combinations(range(1, k), l):
        bounds = (0, *cuts, k)
        result.append(Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return result


def pochhammer(x: int, m: int) -> int:
    """Rising factorial (x)_m = x(x+1)...(x+m-1), with (x)_0 = 1."""
    if m < 0:
        raise InvalidInputError(f"pochhammer needs m >= 0, got {m}")
    result = 1
    for i in range(m):
        result *= x + i
    return result


def falling(x: int, m: int) -> int:
    """Falling factorial x(x-1)...(x-m+1)."""
    if m < 0:
        raise InvalidInputError(f"falling factorial needs m >= 0, got {m}")
    result = 1
    for i in range(m):
        result *= x - i
    return result


def kappa(T: int, k: int, h: Composition) -> int:
    """κ(T,k,h) = T(T-1)...(T-k+2) / prod_{i<l} (T + 1 - h_0 - ... - h_i).

    If a denominator factor vanishes (at most one can), it is dropped together with
    the vanishing numerator factor; empty products equal 1.

    Args:
        T: Integer argument
        k: Positive integer, the sum of the parts of h
        h: Composition in H_{l,k} for some l < k

    Returns:
        κ(T,k,h) as an exact integer
    """
    if not isinstance(h, Composition):
        h = Composition(tuple(h))
    if k < 1 or h.total != k:
        raise InvalidInputError(f"{h.parts} is not a composition of k={k}")

    denominator_factors = [T + 1 - s for s in h.partial_sums()]
    i0: Optional[int] = next((i for i, f in enumerate(denominator_factors) if f == 0), None)

    numerator_factors = [T - m for m in range(k - 1)]
    if i0 is not None:
        del denominator_factors[i0]
        numerator_factors.remove(0)

    numerator = 1
    for f in numerator_factors:
        numerator *= f
    denominator = 1
    for f in denominator_factors:
        denominator *= f

    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(
            "kappa quotient is not an integer",
            index=(T, k, h.parts),
            observed=(numerator, denominator),
        )
    return quotient


@lru_cache(maxsize=None)
def kappa_sum(T: int, k: int, l: int) -> int:
    """Sum of κ(T,k,h) over h in H_{l,k}."""
    return sum(kappa(T, k, h) for h in compositions(l, k))
