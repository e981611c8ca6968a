"""Integers stored as prime-to-exponent maps."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Tuple

import mpmath
from sympy import factorint, isprime

from src.errors import InvalidInputError


@dataclass(frozen=True)
class FactoredInt:
    """Positive integer p_1^{e_1} ... p_r^{e_r}.

    Zero exponents are never stored, so equality of two instances is equality of
    the integers they represent.
    """

    factors: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for p, e in self.factors.items():
            if e < 0:
                raise InvalidInputError(f"negative exponent {e} for prime {p}")
            if e == 0:
                continue
            if not isprime(p):
                raise InvalidInputError(f"{p} is not prime")
            cleaned[int(p)] = int(e)
        object.__setattr__(self, "factors", dict(sorted(cleaned.items())))

    @classmethod
    def one(cls) -> "FactoredInt":
        return cls({})

    @classmethod
    def from_int(cls, value: int) -> "FactoredInt":
        """Factor a positive integer."""
        if value < 1:
            raise InvalidInputError(f"FactoredInt needs a positive integer, got {value}")
        return cls(factorint(value))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "FactoredInt":
        merged: Dict[int, int] = {}
        for p, e in pairs:
            merged[p] = merged.get(p, 0) + e
        return cls(merged)

    @cached_property
    def value(self) -> int:
        result = 1
        for p, e in self.factors.items():
            result *= p**e
        return result

    def valuation(self, p: int) -> int:
        return self.factors.get(p, 0)

    def __int__(self) -> int:
        return self.value

    def __hash__(self) -> int:
        return hash(tuple(self.factors.items()))

    def __mul__(self, other: "FactoredInt") -> "FactoredInt":
        return FactoredInt.from_pairs([*self.factors.items(), *other.factors.items()])

    def __pow__(self, exponent: int) -> "FactoredInt":
        if exponent < 0:
            raise InvalidInputError("negative powers are not integers")
        return FactoredInt({p: e * exponent for p, e in self.factors.items()})

    def divides(self, other: "FactoredInt") -> bool:
        """Exponent-wise comparison; True if self | other."""
        return all(other.valuation(p) >= e for p, e in self.factors.items())

    def divide_exact(self, other: "FactoredInt") -> "FactoredInt":
        """Return self / other, failing unless other divides self."""
        if not other.divides(self):
            raise InvalidInputError(f"{other.value} does not divide {self.value}")
        return FactoredInt({p: e - other.valuation(p) for p, e in self.factors.items()})

    def lcm(self, other: "FactoredInt") -> "FactoredInt":
        primes = set(self.factors) | set(other.factors)
        return FactoredInt({p: max(self.valuation(p), other.valuation(p)) for p in primes})

    def log(self) -> mpmath.mpf:
        """Natural logarithm, without expanding the integer."""
        return mpmath.fsum(e * mpmath.log(p) for p, e in self.factors.items())

    def to_json(self) -> Dict[str, int]:
        return {str(p): e for p, e in self.factors.items()}

    def __repr__(self) -> str:
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors.items())
        return f"FactoredInt({body or '1'})"
