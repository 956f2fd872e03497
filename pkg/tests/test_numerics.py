from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmeval.errors import InvalidArgumentError, ParseError
from mmeval.numerics import (
    Dyadic,
    ceil_log2,
    dyadic_rescale,
    format_rational,
    parse_dyadic,
    parse_int,
    parse_rational,
    round_nearest,
    round_shift,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**9)


@pytest.mark.parametrize(
    "x, expected",
    [
        (Fraction(5, 2), 2),
        (Fraction(0), 0),
        (Fraction(7, 3), 2),
        (Fraction(-7, 3), -2),
        (Fraction(-5, 2), -3),
        (Fraction(1, 2), 0),
        (Fraction(-1, 2), -1),
        (7, 7),
    ],
)
def test_round_nearest_examples(x, expected):
    assert round_nearest(x) == expected


@given(rationals)
def test_round_nearest_is_half_down(x):
    n = round_nearest(x)
    # half-down: the residual lies in (-1/2, 1/2]
    assert Fraction(-1, 2) < x - n <= Fraction(1, 2)


@given(st.integers(-(10**30), 10**30), st.integers(0, 120))
def test_round_shift_matches_round_nearest(n, e):
    assert round_shift(n, e) == round_nearest(Fraction(n, 1 << e))


def test_round_nearest_rejects_floats():
    with pytest.raises(InvalidArgumentError):
        round_nearest(0.5)


@given(rationals, rationals)
def test_fraction_arithmetic_cross_multiplied(x, y):
    s, p = x + y, x * y
    assert s.numerator * x.denominator * y.denominator == (
        x.numerator * y.denominator + y.numerator * x.denominator
    ) * s.denominator
    assert p.numerator * x.denominator * y.denominator == x.numerator * y.numerator * p.denominator


def test_dyadic_rescale_examples():
    assert dyadic_rescale(Dyadic(3, 2), 4) == Dyadic(12, 4)
    # 5/8 at one bit: round(5/4) = 1
    assert dyadic_rescale(Dyadic(5, 3), 1) == Dyadic(1, 1)
    assert dyadic_rescale(Dyadic(0, 7), 2) == Dyadic(0, 2)
    assert dyadic_rescale(Dyadic(0, 0), 9) == Dyadic(0, 9)


@given(st.integers(-(2**40), 2**40), st.integers(0, 50), st.integers(0, 50))
def test_dyadic_rescale_rounds_value(mant, k, k2):
    x = Dyadic(mant, k)
    y = dyadic_rescale(x, k2)
    assert y.exponent == k2
    assert y.mantissa == round_nearest(x.to_fraction() * 2**k2)
    if k2 >= k:
        assert y.to_fraction() == x.to_fraction()


def test_dyadic_rejects_negative_exponent():
    with pytest.raises(InvalidArgumentError):
        Dyadic(1, -1)
    with pytest.raises(InvalidArgumentError):
        dyadic_rescale(Dyadic(1, 1), -2)


@given(st.integers(1, 2**200))
def test_ceil_log2(n):
    c = ceil_log2(n)
    assert 2**c >= n
    assert c == 0 or 2 ** (c - 1) < n


def test_parsers():
    assert parse_int(" -1234567890123456789 ") == -1234567890123456789
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-7") == -7
    assert parse_rational("3/2^3") == Fraction(3, 8)
    assert parse_dyadic("-5/2^10") == Dyadic(-5, 10)
    assert str(Dyadic(-5, 10)) == "-5/2^10"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    for bad, fn in [("1.5", parse_rational), ("1/0", parse_rational), ("x", parse_int), ("3/4", parse_dyadic)]:
        with pytest.raises(ParseError):
            fn(bad)


def _binomial_bound_holds(d, eps):
    lhs = 1 + d * eps
    mid = (1 + eps) ** d
    rhs = 1 + d * eps + d * d * eps * eps
    return lhs <= mid <= rhs


@given(st.integers(1, 64), st.fractions(min_value=0, max_value=1, max_denominator=10**8))
def test_binomial_series_bounds(d, u):
    # any eps in [0, 1/d^2)
    eps = u / (d * d)
    if eps * d * d >= 1:
        eps = Fraction(1, d * d + 1)
    assert _binomial_bound_holds(d, eps)
