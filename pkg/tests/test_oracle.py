import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmeval.errors import InvalidArgumentError
from mmeval.numerics import ceil_log2
from mmeval.oracle import (
    PowerOracle,
    RationalOracle,
    make_complex_oracle,
    make_rational_oracle,
    power_oracle,
)

open_unit = st.fractions(min_value=-1, max_value=1, max_denominator=2**40).filter(lambda x: abs(x) < 1)


def within(alpha, b, k):
    return abs(alpha - Fraction(b, 1 << k)) < Fraction(1, 1 << k)


def test_rational_oracle_examples():
    third = make_rational_oracle(Fraction(1, 3))
    assert third.query(4) == 5
    assert abs(Fraction(1, 3) - Fraction(5, 16)) == Fraction(1, 48)
    zero = make_rational_oracle(0)
    assert all(zero.query(k) == 0 for k in range(0, 70, 7))
    assert make_rational_oracle(Fraction(-1, 2)).query(3) == -4
    assert third.approximation(4) == Fraction(5, 16)


def test_make_rational_oracle_rejects_closed_endpoints():
    for x in (1, -1, Fraction(3, 2)):
        with pytest.raises(InvalidArgumentError):
            make_rational_oracle(x)
    # the permissive class admits unit magnitudes, answered exactly
    assert RationalOracle(-1).query(9) == -(2**9)
    with pytest.raises(InvalidArgumentError):
        RationalOracle(Fraction(5, 4))
    with pytest.raises(InvalidArgumentError):
        third = RationalOracle(Fraction(1, 3))
        third.query(-1)


@given(open_unit, st.integers(0, 512))
def test_oracle_contract(alpha, k):
    b = make_rational_oracle(alpha).query(k)
    assert within(alpha, b, k)
    assert -(1 << k) <= b <= (1 << k)


def test_sign():
    assert make_rational_oracle(Fraction(-1, 7)).sign() == -1
    assert make_rational_oracle(0).sign() == 0
    assert make_rational_oracle(Fraction(1, 7)).sign() == 1
    neg = make_rational_oracle(Fraction(-1, 3))
    assert power_oracle(neg, 3).sign() == -1
    assert power_oracle(neg, 4).sign() == 1


def test_power_oracle_examples():
    half = make_rational_oracle(Fraction(1, 2))
    assert power_oracle(half, 3).query(4) == 2
    assert power_oracle(half, 1) is half
    twothirds = make_rational_oracle(Fraction(2, 3))
    b = power_oracle(twothirds, 5).query(20)
    assert within(Fraction(2, 3) ** 5, b, 20)
    with pytest.raises(InvalidArgumentError):
        power_oracle(half, 0)


@settings(max_examples=60, deadline=None)
@given(
    st.fractions(min_value=-1, max_value=1, max_denominator=2**16).filter(lambda x: abs(x) < 1),
    st.integers(1, 2**20),
    st.integers(0, 256),
)
def test_power_accuracy(alpha, D, k):
    b = power_oracle(make_rational_oracle(alpha), D).query(k)
    if D <= 4096 or abs(alpha) > Fraction(1, 2):
        assert within(alpha**D, b, k)
    else:
        # 0 < |alpha^D| < 2^-4096: only 0 and the unit of matching sign qualify
        sign = 0 if alpha == 0 else (1 if alpha > 0 or D % 2 == 0 else -1)
        assert b in {0, sign}


def interval_power(alpha, D, prec):
    """Rigorous ``[lo, hi]`` around ``alpha**D`` for ``0 < alpha < 1`` by directed rounding."""
    scale = 1 << prec
    lo = hi = None
    base_lo = (alpha.numerator * scale) // alpha.denominator
    base_hi = -((-alpha.numerator * scale) // alpha.denominator)
    for bit in bin(D)[2:]:
        if lo is None:
            lo, hi = scale, scale
        lo, hi = lo * lo // scale, -((-hi * hi) // scale)
        if bit == "1":
            lo, hi = lo * base_lo // scale, -((-hi * base_hi) // scale)
    return Fraction(lo, scale), Fraction(hi, scale)


def test_power_accuracy_near_one_large_exponent():
    alpha = 1 - Fraction(1, 2**22)
    for D in (2**20, 2**20 - 1, 777_777):
        for k in (8, 64, 256):
            lo, hi = interval_power(alpha, D, k + 96)
            b = power_oracle(make_rational_oracle(alpha), D).query(k)
            assert within(lo, b, k) and within(hi, b, k)


def test_interval_power_brackets_exact():
    for alpha, D in [(Fraction(2, 3), 5), (Fraction(999, 1000), 300)]:
        lo, hi = interval_power(alpha, D, 80)
        assert lo <= alpha**D <= hi


@pytest.mark.parametrize("D", [1, 2, 3, 5, 8, 1000, 2**20 - 1, 2**20])
def test_power_schedule_structure(D):
    sched = PowerOracle(make_rational_oracle(Fraction(1, 3)), D).precision_schedule(10)
    assert sched[0] == (D, 10) and sched[-1][0] == 1
    assert len(sched) - 1 <= ceil_log2(D)
    for (_, k0), (_, k1) in zip(sched, sched[1:]):
        assert 0 < k1 - k0 <= 4


class CountingOracle(RationalOracle):
    calls = 0

    def _compute(self, k):
        type(self).calls += 1
        return super()._compute(k)


def test_memoization_and_threads():
    o = CountingOracle(Fraction(3, 7))
    for _ in range(5):
        o.query(40)
    assert CountingOracle.calls == 1
    results = []
    threads = [threading.Thread(target=lambda k=k: results.append((k, o.query(k)))) for k in range(50)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(within(Fraction(3, 7), b, k) for k, b in results)


def test_complex_oracle():
    z = make_complex_oracle(Fraction(1, 3), Fraction(-1, 2))
    assert z.real.query(4) == 5 and z.imag.query(4) == -8
