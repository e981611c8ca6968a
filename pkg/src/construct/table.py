"""Integer coefficient tables c_{i,j} and tail expansions 𝔄_d."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.errors import InvalidInputError


@dataclass(frozen=True)
class CoeffTable:
    """F_n(X) = sum_{i=1}^{a} sum_{j=0}^{n} c_{i,j} / (X+j)^i; row i-1 of ``c`` holds c_{i,.}."""

    c: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.c)
        if not rows or not rows[0]:
            raise InvalidInputError("coefficient table must have at least one row and column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise InvalidInputError("ragged coefficient table")
        object.__setattr__(self, "c", rows)

    @classmethod
    def zeros(cls, a: int, n: int) -> "CoeffTable":
        return cls(tuple((0,) * (n + 1) for _ in range(a)))

    @classmethod
    def from_vector(cls, x: Sequence[int], a: int, n: int) -> "CoeffTable":
        """Column order (i', j') with i' major, as used by the vanishing system."""
        if len(x) != a * (n + 1):
            raise InvalidInputError(f"expected {a * (n + 1)} entries, got {len(x)}")
        return cls(tuple(tuple(x[(i * (n + 1)) : (i + 1) * (n + 1)]) for i in range(a)))

    @property
    def a(self) -> int:
        return len(self.c)

    @property
    def n(self) -> int:
        return len(self.c[0]) - 1

    def entry(self, i: int, j: int) -> int:
        """c_{i,j} with 1-based i."""
        return self.c[i - 1][j]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.c)

    @property
    def b(self) -> int:
        """Largest i with P_i != 0 (0 for the zero table)."""
        for i in range(self.a, 0, -1):
            if any(self.c[i - 1]):
                return i
        return 0

    def max_abs(self) -> int:
        return max(abs(v) for row in self.c for v in row)

    def scaled(self, m: int) -> "CoeffTable":
        return CoeffTable(tuple(tuple(m * v for v in row) for row in self.c))

    def __add__(self, other: "CoeffTable") -> "CoeffTable":
        if (self.a, self.n) != (other.a, other.n):
            raise InvalidInputError("tables of different shapes")
        return CoeffTable(
            tuple(tuple(u + v for u, v in zip(r1, r2)) for r1, r2 in zip(self.c, other.c))
        )

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.c]

    def to_json(self, tail: Optional["TailExpansion"] = None) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "a": self.a,
            "n": self.n,
            "c": [[str(v) for v in row] for row in self.c],
            "b": self.b,
        }
        if tail is not None:
            payload["tail"] = [str(v) for v in tail.coefficients]
        return payload

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "CoeffTable":
        try:
            table = cls(tuple(tuple(int(v) for v in row) for row in payload["c"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed table payload: {exc}") from exc
        if (table.a, table.n) != (payload.get("a", table.a), payload.get("n", table.n)):
            raise InvalidInputError("table shape does not match its a/n fields")
        return table


@dataclass(frozen=True)
class TailExpansion:
    """𝔄_1, ..., 𝔄_D of F_n(t) = sum_d 𝔄_d / t^d."""

    coefficients: Tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        """𝔄_d with 1-based d."""
        return self.coefficients[d - 1]

    @property
    def D(self) -> int:
        return len(self.coefficients)

    def first_nonzero(self) -> Optional[int]:
        return next((d for d, v in enumerate(self.coefficients, start=1) if v), None)
