"""Tests for the factored integer representation."""

import mpmath
import pytest

from src.arith import FactoredInt
from src.errors import InvalidInputError


def test_from_int_round_trip_value():
    x = FactoredInt.from_int(360)
    assert x.factors == {2: 3, 3: 2, 5: 1}
    assert x.value == 360
    assert int(x) == 360


def test_zero_exponents_are_dropped():
    assert FactoredInt({2: 0, 3: 1}) == FactoredInt({3: 1})
    assert FactoredInt.one().value == 1


def test_rejects_composite_keys_and_negative_exponents():
    with pytest.raises(InvalidInputError):
        FactoredInt({4: 1})
    with pytest.raises(InvalidInputError):
        FactoredInt({2: -1})
    with pytest.raises(InvalidInputError):
        FactoredInt.from_int(0)


def test_multiplication_power_and_lcm():
    x, y = FactoredInt.from_int(12), FactoredInt.from_int(18)
    assert (x * y).value == 216
    assert (x**3).value == 1728
    assert x.lcm(y).value == 36
    assert FactoredInt.from_pairs([(2, 1), (2, 2), (7, 1)]).value == 56


def test_divisibility_and_exact_division():
    x, y = FactoredInt.from_int(6), FactoredInt.from_int(60)
    assert x.divides(y)
    assert not y.divides(x)
    assert y.divide_exact(x).value == 10
    with pytest.raises(InvalidInputError):
        x.divide_exact(y)


def test_valuation_and_log():
    x = FactoredInt.from_int(2**10 * 3)
    assert x.valuation(2) == 10
    assert x.valuation(5) == 0
    with mpmath.workdps(30):
        assert abs(x.log() - mpmath.log(3072)) < mpmath.mpf(10) ** -25


def test_json_form_uses_string_keys():
    assert FactoredInt.from_int(12).to_json() == {"2": 2, "3": 1}
