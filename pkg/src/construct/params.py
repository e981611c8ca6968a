"""Run parameters (a, n, r, ω, Ω, κ, h, mode, z0, q) with their integrality rules."""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from src.recurrence import POLYLOG_ALPHA, ZETA_ALPHA, RecurrenceSetup


class Mode(str, Enum):
    """Which family of values the linear forms involve."""

    ZETA = "zeta"
    POLYLOG = "polylog"


def parse_rational(value: Any) -> Fraction:
    """Accept ints, "p/q" or decimal strings, floats (via their repr) and Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


Rational = Annotated[Fraction, BeforeValidator(parse_rational)]


def _integral(name: str, value: Fraction) -> int:
    if value.denominator != 1:
        raise ValueError(f"{name} must be an integer, got {value}")
    return value.numerator


class Params(BaseModel):
    """Validated run configuration."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True, populate_by_name=True)

    a: int = Field(ge=1)
    n: int = Field(ge=1)
    r: Rational = Fraction(1)
    omega: Rational
    big_omega: Rational = Field(alias="Omega")
    kappa: Rational
    h: int = Field(default=0, ge=0)
    mode: Mode = Mode.ZETA
    z0: Rational = Fraction(-1)
    q: int = Field(default=1, ge=1)

    @model_validator(mode="before")
    @classmethod
    def _default_kappa(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("kappa") is None:
            data = dict(data)
            data["kappa"] = data.get("omega")
        return data

    @model_validator(mode="after")
    def _check(self) -> "Params":
        if not self.a > self.big_omega >= self.omega >= 1:
            raise ValueError(
                f"need a > Omega >= omega >= 1, got a={self.a}, Omega={self.big_omega}, "
                f"omega={self.omega}"
            )
        if self.r < 1:
            raise ValueError(f"need r >= 1, got {self.r}")
        for name, value in (
            ("r*n", self.r * self.n),
            ("omega*n", self.omega * self.n),
            ("Omega*n", self.big_omega * self.n),
            ("kappa*n", self.kappa * self.n),
        ):
            _integral(name, value)
        if self.mode is Mode.ZETA:
            if self.z0 != -1 or self.q != 1:
                raise ValueError("zeta mode requires z0 = -1 and q = 1")
        else:
            if abs(self.z0) < 1 or self.z0 == 1:
                raise ValueError(f"polylog mode needs |z0| >= 1 and z0 != 1, got {self.z0}")
            if (self.q * self.z0).denominator != 1:
                raise ValueError(f"q={self.q} does not clear the denominator of z0={self.z0}")
        return self

    @property
    def rn(self) -> int:
        return _integral("r*n", self.r * self.n)

    @property
    def omega_n(self) -> int:
        return _integral("omega*n", self.omega * self.n)

    @property
    def big_omega_n(self) -> int:
        return _integral("Omega*n", self.big_omega * self.n)

    @property
    def kappa_n(self) -> int:
        return _integral("kappa*n", self.kappa * self.n)

    @property
    def unknowns(self) -> int:
        """N = a(n+1)."""
        return self.a * (self.n + 1)

    @property
    def equations(self) -> int:
        """M0 = ωn - 1."""
        return self.omega_n - 1

    @property
    def alpha(self) -> Tuple[int, int]:
        return ZETA_ALPHA if self.mode is Mode.ZETA else POLYLOG_ALPHA

    def recurrence_setup(self) -> RecurrenceSetup:
        return RecurrenceSetup(self.a, self.n, *self.alpha)

    def admissible_window(self) -> Tuple[int, int]:
        """Inclusive range of k for which linear forms are defined."""
        low = 2 * self.rn + 2 if self.mode is Mode.ZETA else self.rn + self.n + 1
        return low, self.kappa_n

    def admissible_pairs(self) -> list:
        low, high = self.admissible_window()
        return [(p, k) for p in range(self.h + 1) for k in range(low, high + 1)]

    def with_n(self, n: int) -> "Params":
        return Params.model_validate({**self.model_dump(), "n": n})

    def to_table(self) -> Dict[str, Any]:
        """TOML/JSON friendly representation (rationals as strings)."""
        return {
            "a": self.a,
            "n": self.n,
            "r": str(self.r),
            "omega": str(self.omega),
            "Omega": str(self.big_omega),
            "kappa": str(self.kappa),
            "h": self.h,
            "mode": self.mode.value,
            "z0": str(self.z0),
            "q": self.q,
        }

    def describe(self) -> str:
        return (
            f"{self.mode.value} a={self.a} n={self.n} r={self.r} omega={self.omega} "
            f"Omega={self.big_omega} kappa={self.kappa} h={self.h} z0={self.z0} q={self.q}"
        )
