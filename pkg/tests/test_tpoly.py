from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from novertex.tpoly import TPoly, TPolyRing

t = TPoly.var(1, 0)


def test_falling_binomial():
    assert t.falling_binomial(2) == (t * t - t) * Fraction(1, 2)
    assert t.falling_binomial(0) == 1


@given(st.integers(-6, 6), st.integers(0, 5))
def test_binomial_at_integers(n, k):
    from math import comb, factorial, prod

    expected = Fraction(prod(n - i for i in range(k)), factorial(k))
    assert t.falling_binomial(k).evaluate([n]) == expected
    if n >= 0:
        assert expected == comb(n, k)


def test_repr():
    assert repr(t * t - 1) == "-1 + t^2"
    two = TPoly.var(2, 1) * TPoly.var(2, 0) * 3
    assert repr(two) == "3*t1*t2"


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        TPoly.var(1, 0) + TPoly.var(2, 0)


def test_only_constants_invert():
    ring = TPolyRing(1)
    assert ring.invert(TPoly.const(1, 4)) == Fraction(1, 4)
    with pytest.raises(ArithmeticError):
        ring.invert(t)


def test_serialization():
    assert (t * t - 1).to_pairs() == [[[0], "-1/1"], [[2], "1/1"]]
