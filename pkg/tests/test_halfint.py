from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from acmbundles.halfint import HalfInt

doubled = st.integers(min_value=-10**6, max_value=10**6)


@given(doubled, doubled)
def test_arithmetic_matches_fractions(a, b):
    x, y = HalfInt(a), HalfInt(b)
    fx, fy = Fraction(a, 2), Fraction(b, 2)
    assert (x + y).to_fraction() == fx + fy
    assert (x - y).to_fraction() == fx - fy
    assert (-x).to_fraction() == -fx
    assert (x < y) == (fx < fy)
    assert (x == y) == (fx == fy)


@given(doubled, st.integers(-50, 50))
def test_integer_scaling(a, c):
    assert (HalfInt(a) * c).to_fraction() == Fraction(a, 2) * c
    assert (c * HalfInt(a)) == HalfInt(a) * c


@given(doubled)
def test_is_integer_iff_doubled_even(a):
    assert HalfInt(a).is_integer() == (a % 2 == 0)


def test_of_and_str():
    assert HalfInt.of(Fraction(5, 2)) == HalfInt(5)
    assert HalfInt.of(3).doubled == 6
    assert str(HalfInt(5)) == "5/2"
    assert str(HalfInt(-3)) == "-3/2"
    assert str(HalfInt(8)) == "4"
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_int_conversion_requires_integer():
    assert int(HalfInt(8)) == 4
    with pytest.raises(ValueError):
        int(HalfInt(7))
    assert HalfInt(8).halve() == 2
    assert HalfInt(6).halve() == HalfInt(3)
    with pytest.raises(ValueError):
        HalfInt(5).halve()


def test_json_form():
    assert HalfInt(5).to_json() == {"num": 5, "den": 2}
    assert HalfInt(8).to_json() == {"num": 4, "den": 1}
    assert HalfInt(-1).to_json() == {"num": -1, "den": 2}


def test_hash_consistent_with_int():
    assert hash(HalfInt(8)) == hash(4)
    assert {HalfInt(8): "x"}[4] == "x"


def test_mixing_with_float_is_rejected():
    with pytest.raises(TypeError):
        HalfInt(1) + 0.5
