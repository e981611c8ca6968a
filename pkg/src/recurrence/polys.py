"""Dense exact polynomials and rational functions N(z) z^{-e1} (1-z)^{-e2}."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from src.errors import InvalidInputError

Rational = Union[int, Fraction]
Coeffs = Tuple[Fraction, ...]


def trim(coeffs: Iterable[Rational]) -> Coeffs:
    """Drop trailing zero coefficients (the zero polynomial is the empty tuple)."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(p: Sequence[Rational], q: Sequence[Rational]) -> Coeffs:
    size = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(size)
    )


def poly_scale(p: Sequence[Rational], c: Rational) -> Coeffs:
    return trim(c * x for x in p)


def poly_mul(p: Sequence[Rational], q: Sequence[Rational]) -> Coeffs:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            out[i + j] += x * y
    return trim(out)


def poly_shift(p: Sequence[Rational], m: int) -> Coeffs:
    """Multiply by z^m (m >= 0)."""
    return trim([0] * m + list(p)) if p else ()


def poly_derivative(p: Sequence[Rational]) -> Coeffs:
    return trim(i * p[i] for i in range(1, len(p)))


def poly_eval(p: Sequence[Rational], z: Rational) -> Fraction:
    result = Fraction(0)
    for c in reversed(p):
        result = result * z + c
    return result


def one_minus_z_power(m: int) -> Coeffs:
    """(1 - z)^m as a dense list."""
    out: Coeffs = (Fraction(1),)
    for _ in range(m):
        out = poly_mul(out, (1, -1))
    return out


def degree(p: Sequence[Rational]) -> int:
    """Degree of a trimmed polynomial, -1 for zero."""
    return len(p) - 1


@dataclass(frozen=True)
class ShiftedPoly:
    """numerator(z) * z^{-z_order} * (1-z)^{-one_minus_z_order}."""

    numerator: Coeffs = ()
    z_order: int = 0
    one_minus_z_order: int = 0

    def __post_init__(self):
        object.__setattr__(self, "numerator", trim(self.numerator))

    @classmethod
    def zero(cls, z_order: int = 0, one_minus_z_order: int = 0) -> "ShiftedPoly":
        return cls((), z_order, one_minus_z_order)

    @property
    def degree(self) -> int:
        return degree(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.numerator):
            return self.numerator[j]
        return Fraction(0)

    def with_orders(self, z_order: int, one_minus_z_order: int) -> "ShiftedPoly":
        """Same function written over z^{z_order} (1-z)^{one_minus_z_order}."""
        dz = z_order - self.z_order
        dw = one_minus_z_order - self.one_minus_z_order
        if dz < 0 or dw < 0:
            raise InvalidInputError(
                f"cannot lower orders ({self.z_order}, {self.one_minus_z_order}) "
                f"to ({z_order}, {one_minus_z_order})"
            )
        numerator = poly_mul(poly_shift(self.numerator, dz), one_minus_z_power(dw))
        return ShiftedPoly(numerator, z_order, one_minus_z_order)

    def __add__(self, other: "ShiftedPoly") -> "ShiftedPoly":
        e1 = max(self.z_order, other.z_order)
        e2 = max(self.one_minus_z_order, other.one_minus_z_order)
        left, right = self.with_orders(e1, e2), other.with_orders(e1, e2)
        return ShiftedPoly(poly_add(left.numerator, right.numerator), e1, e2)

    def __neg__(self) -> "ShiftedPoly":
        return self.scale(-1)

    def __sub__(self, other: "ShiftedPoly") -> "ShiftedPoly":
        return self + (-other)

    def scale(self, c: Rational) -> "ShiftedPoly":
        return ShiftedPoly(poly_scale(self.numerator, c), self.z_order, self.one_minus_z_order)

    def times_poly(self, p: Sequence[Rational]) -> "ShiftedPoly":
        return ShiftedPoly(poly_mul(self.numerator, p), self.z_order, self.one_minus_z_order)

    def divide_z(self) -> "ShiftedPoly":
        return ShiftedPoly(self.numerator, self.z_order + 1, self.one_minus_z_order)

    def divide_one_minus_z(self) -> "ShiftedPoly":
        return ShiftedPoly(self.numerator, self.z_order, self.one_minus_z_order + 1)

    def derivative(self) -> "ShiftedPoly":
        """d/dz, raising each nonzero order by one.

        (N z^{-e1} (1-z)^{-e2})' = (z(1-z) N' - e1 (1-z) N + e2 z N) z^{-e1-1} (1-z)^{-e2-1};
        a zero order stays zero so no spurious factor is introduced.
        """
        N, e1, e2 = self.numerator, self.z_order, self.one_minus_z_order
        dN = poly_derivative(N)
        z_factor = (0, 1) if e1 else (1,)
        w_factor = (1, -1) if e2 else (1,)
        terms = poly_mul(poly_mul(dN, z_factor), w_factor)
        if e1:
            terms = poly_add(terms, poly_scale(poly_mul(N, w_factor), -e1))
        if e2:
            terms = poly_add(terms, poly_scale(poly_mul(N, z_factor), e2))
        return ShiftedPoly(terms, e1 + 1 if e1 else 0, e2 + 1 if e2 else 0)

    def evaluate(self, z: Rational) -> Fraction:
        z = Fraction(z)
        if (z == 0 and self.z_order > 0) or (z == 1 and self.one_minus_z_order > 0):
            raise InvalidInputError(f"pole at z={z}")
        return poly_eval(self.numerator, z) / (z**self.z_order * (1 - z) ** self.one_minus_z_order)

    def same_function(self, other: "ShiftedPoly") -> bool:
        e1 = max(self.z_order, other.z_order)
        e2 = max(self.one_minus_z_order, other.one_minus_z_order)
        return self.with_orders(e1, e2).numerator == other.with_orders(e1, e2).numerator
