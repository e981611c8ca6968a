"""Midpoint-radius reals on top of mpmath.

Every operation runs at the precision of the active mpmath context (callers wrap
work in ``mpmath.workdps``) and widens the radius by the rounding error of the
new midpoint, so the exact result stays inside the ball.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Union

import mpmath

from src.errors import InvalidInputError

Exact = Union[int, Fraction]


def _ulp_bound(value: mpmath.mpf) -> mpmath.mpf:
    return abs(value) * mpmath.ldexp(1, 1 - mpmath.mp.prec)


def _grow(radius: mpmath.mpf) -> mpmath.mpf:
    return radius * (1 + mpmath.ldexp(1, 2 - mpmath.mp.prec))


def _exact_abs(value: mpmath.mpf) -> mpmath.mpf:
    return value if value >= 0 else mpmath.fneg(value, exact=True)


def _as_fraction(value: mpmath.mpf) -> Fraction:
    man, exp = value.man_exp
    return Fraction(man) * Fraction(2) ** exp


@dataclass(frozen=True)
class BallReal:
    """The closed interval [mid - rad, mid + rad]."""

    mid: mpmath.mpf
    rad: mpmath.mpf = mpmath.mpf(0)

    def __post_init__(self):
        if self.rad < 0:
            raise InvalidInputError(f"negative radius {self.rad}")

    @classmethod
    def exact(cls, value: Exact) -> "BallReal":
        """Ball around an exact rational, radius zero when the rounding is exact."""
        value = Fraction(value)
        mid = mpmath.mpf(value.numerator) / value.denominator
        if value.denominator == 1 and mpmath.mpf(value.numerator) == value.numerator:
            return cls(mid, mpmath.mpf(0))
        return cls(mid, _ulp_bound(mid))

    @classmethod
    def zero(cls) -> "BallReal":
        return cls(mpmath.mpf(0), mpmath.mpf(0))

    @classmethod
    def around(cls, mid: Any, rad: Any) -> "BallReal":
        mid = mpmath.mpf(mid)
        return cls(mid, _grow(mpmath.mpf(rad)) + _ulp_bound(mid))

    def __add__(self, other: Union["BallReal", Exact]) -> "BallReal":
        other = other if isinstance(other, BallReal) else BallReal.exact(other)
        mid = self.mid + other.mid
        return BallReal(mid, _grow(self.rad + other.rad) + _ulp_bound(mid))

    __radd__ = __add__

    def __neg__(self) -> "BallReal":
        return BallReal(mpmath.fneg(self.mid, exact=True), self.rad)

    def __sub__(self, other: Union["BallReal", Exact]) -> "BallReal":
        other = other if isinstance(other, BallReal) else BallReal.exact(other)
        mid = self.mid - other.mid
        return BallReal(mid, _grow(self.rad + other.rad) + _ulp_bound(mid))

    def __rsub__(self, other: Exact) -> "BallReal":
        return BallReal.exact(other) - self

    def __mul__(self, other: Union["BallReal", Exact]) -> "BallReal":
        other = other if isinstance(other, BallReal) else BallReal.exact(other)
        mid = self.mid * other.mid
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return BallReal(mid, _grow(rad) + _ulp_bound(mid))

    __rmul__ = __mul__

    @property
    def lower(self) -> mpmath.mpf:
        return mpmath.fsub(self.mid, self.rad, rounding="f")

    @property
    def upper(self) -> mpmath.mpf:
        return mpmath.fadd(self.mid, self.rad, rounding="c")

    def magnitude(self) -> mpmath.mpf:
        """Upper bound on |x| for x in the ball."""
        return mpmath.fadd(_exact_abs(self.mid), self.rad, rounding="c")

    def contains(self, value: Any) -> bool:
        if isinstance(value, Fraction):
            return abs(value - _as_fraction(self.mid)) <= _as_fraction(self.rad)
        offset = mpmath.fsub(mpmath.mpf(value), self.mid, exact=True)
        return _exact_abs(offset) <= self.rad

    def contains_zero(self) -> bool:
        return _exact_abs(self.mid) <= self.rad

    def subset_of(self, other: "BallReal") -> bool:
        offset = _exact_abs(mpmath.fsub(self.mid, other.mid, exact=True))
        return mpmath.fadd(offset, self.rad, exact=True) <= other.rad

    def to_json(self, digits: int = 30) -> Dict[str, str]:
        return {"mid": mpmath.nstr(self.mid, digits), "rad": mpmath.nstr(self.rad, 5)}

    def __repr__(self) -> str:
        return f"BallReal({mpmath.nstr(self.mid, 15)} +/- {mpmath.nstr(self.rad, 3)})"
