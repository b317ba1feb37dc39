from fractions import Fraction

import pytest
from hypothesis import given

from gtspace.dyadic import HALF, ONE, ZERO, Dyadic, parse_dyadic
from gtspace.tests.strategies import dyadics


def test_normalized_on_construction():
    assert Dyadic(2, 2) == HALF
    assert Dyadic(4, 2) == ONE
    assert Dyadic(0, 5) == ZERO
    assert Dyadic(6, 3).exponent == 2


def test_arithmetic_is_exact():
    assert HALF + HALF == ONE
    assert ONE - Dyadic(1, 2) == Dyadic(3, 2)
    assert HALF * HALF == Dyadic(1, 2)
    assert ONE.halve(3) == Dyadic(1, 3)
    assert ZERO + 1 == ONE


def test_ordering():
    assert ZERO < Dyadic(1, 3) < HALF < ONE
    assert max([HALF, Dyadic(3, 2), ONE]) == ONE


def test_of_rejects_non_dyadic():
    assert Dyadic.of(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(ValueError):
        Dyadic.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_render_and_parse():
    assert HALF.render() == '1/2^1'
    assert ONE.render() == '1/2^0'
    assert parse_dyadic('3/2^2') == Dyadic(3, 2)
    with pytest.raises(ValueError):
        parse_dyadic('0.5')


@given(dyadics, dyadics)
def test_matches_fraction_arithmetic(left, right):
    assert (left + right).to_fraction() == left.to_fraction() + right.to_fraction()
    assert (left - right).to_fraction() == left.to_fraction() - right.to_fraction()
    assert (left * right).to_fraction() == left.to_fraction() * right.to_fraction()
    assert (left < right) == (left.to_fraction() < right.to_fraction())


@given(dyadics)
def test_hash_follows_value(value):
    assert hash(value) == hash(Dyadic(value.numerator * 4, value.exponent + 2))
    assert parse_dyadic(value.render()) == value
