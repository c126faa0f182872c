from fractions import Fraction

import pytest

from eulerprod.bernoulli import (
    MAX_K,
    bernoulli_numbers,
    euler_coefficient,
    stirling_coefficient,
)
from eulerprod.errors import ValidationError


def test_small_values():
    t = bernoulli_numbers(4)
    assert t[0] == 1
    assert t[1] == Fraction(-1, 2)
    assert t[2] == Fraction(1, 6)
    assert t[3] == 0
    assert t[4] == Fraction(-1, 30)
    assert t.max_index == 8 and len(t) == 9


def test_defining_recurrence_holds_exactly():
    t = bernoulli_numbers(MAX_K)
    for n in range(1, t.max_index + 1):
        assert t.recurrence_residual(n) == 0
    assert all(t[k] == 0 for k in range(3, t.max_index + 1, 2))


def test_values_are_lowest_terms():
    for v in bernoulli_numbers(20).values:
        assert isinstance(v, Fraction) and v.denominator > 0


@pytest.mark.parametrize(
    "k, expected",
    [(1, Fraction(1, 2)), (2, Fraction(1, 6)), (3, Fraction(1, 6)), (4, Fraction(3, 10)), (5, Fraction(5, 6))],
)
def test_euler_coefficient_table(k, expected):
    assert euler_coefficient(k) == expected


def test_euler_coefficient_reduces_to_stirling_coefficient():
    t = bernoulli_numbers(30)
    for k in range(1, 31):
        lhs = euler_coefficient(k, t) / ((2 * k - 1) * 2 * k * (2 * k + 1))
        assert lhs == abs(t[2 * k]) / ((2 * k - 1) * 2 * k)
        assert abs(stirling_coefficient(k)) == lhs


def test_stirling_coefficient_signs_alternate():
    assert [stirling_coefficient(k) > 0 for k in range(1, 9)] == [True, False] * 4


@pytest.mark.parametrize("K", [0, -3, MAX_K + 1, 2.0])
def test_bernoulli_range(K):
    with pytest.raises(ValidationError):
        bernoulli_numbers(K)


def test_table_too_small():
    with pytest.raises(ValidationError):
        euler_coefficient(5, bernoulli_numbers(4))
    with pytest.raises(ValidationError):
        euler_coefficient(0)
