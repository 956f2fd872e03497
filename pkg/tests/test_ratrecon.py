import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmeval.errors import InvalidArgumentError, ReconstructionFailedError
from mmeval.ratrecon import (
    continued_fraction_value,
    convergent,
    convergents,
    quotient_sequence,
    rational_reconstruct,
)

positive = st.integers(1, 2**512)


def test_quotient_sequence_examples():
    assert quotient_sequence(7, 3) == [2, 3]
    assert quotient_sequence(5, 5) == [1]
    assert quotient_sequence(355, 113) == [3, 7, 16]
    assert quotient_sequence(3, 2) == [1, 2]
    with pytest.raises(InvalidArgumentError):
        quotient_sequence(0, 3)


def test_convergent_examples():
    assert convergent(355, 113, 1)[:2] == (3, 1)
    assert convergent(355, 113, 2)[:2] == (22, 7)
    assert convergent(355, 113, 3)[:2] == (355, 113)
    with pytest.raises(InvalidArgumentError):
        convergent(355, 113, 4)


@given(positive, positive)
def test_fold_reproduces_fraction_and_canonical(a, b):
    qs = quotient_sequence(a, b)
    num, den = continued_fraction_value(qs)
    assert Fraction(num, den) == Fraction(a, b) and gcd(num, den) == 1
    assert all(q >= 1 for q in qs[1:])
    assert len(qs) == 1 or qs[-1] >= 2


@given(positive, positive)
def test_convergent_properties(M, N):
    qs = quotient_sequence(M, N)
    cs = convergents(qs)
    alpha = Fraction(M, N)
    for i, c in enumerate(cs):
        assert gcd(c.a, c.b) == 1 and c.b > 0
        if i >= 2:
            assert c.a == qs[i] * cs[i - 1].a + cs[i - 2].a
            assert c.b == qs[i] * cs[i - 1].b + cs[i - 2].b
        if i >= 1:
            assert c.b > cs[i - 1].b or i == 1
        if i + 1 < len(cs):
            n = i + 1
            nxt = cs[i + 1]
            assert Fraction(nxt.a, nxt.b) - Fraction(c.a, c.b) == Fraction((-1) ** (n - 1), c.b * nxt.b)
            err = abs(alpha - Fraction(c.a, c.b))
            assert Fraction(1, c.b * (c.b + nxt.b)) <= err <= Fraction(1, c.b * nxt.b)
    assert Fraction(cs[-1].a, cs[-1].b) == alpha


@given(st.integers(1, 2**200), st.integers(1, 2**200))
def test_matrix_convergents_match_recurrence(M, N):
    cs = convergents(quotient_sequence(M, N))
    for c in cs:
        assert convergent(M, N, c.index) == c


def test_reconstruct_examples():
    assert rational_reconstruct(11, 32, 2) == (1, 3)
    assert rational_reconstruct(-91, 128, 3) == (-5, 7)
    assert rational_reconstruct(3, 7, 3) == (3, 7)
    assert rational_reconstruct(0, 9, 3) == (0, 1)


def _enumerate_small(A, B, s):
    # exhaustive oracle over denominators below 2^s
    hits = set()
    for b in range(1, 1 << s):
        a0 = (A * b) // B
        for a in (a0 - 1, a0, a0 + 1):
            if gcd(a, b) == 1 and abs(Fraction(A, B) - Fraction(a, b)) < Fraction(1, 2 ** (2 * s + 1)):
                hits.add((a, b))
    return hits


def test_reconstruct_matches_exhaustive_search():
    rng = random.Random(31)
    for _ in range(300):
        s = rng.randint(1, 6)
        B = 1 << (2 * s + 1)
        A = rng.randint(-B, B)
        hits = _enumerate_small(A, B, s)
        assert len(hits) <= 1
        if hits:
            assert rational_reconstruct(A, B, s) == hits.pop()
        else:
            with pytest.raises(ReconstructionFailedError):
                rational_reconstruct(A, B, s)


@given(st.integers(1, 128), st.data())
def test_reconstruct_perturbed(s, data):
    b = data.draw(st.integers(1, 2**s - 1))
    a = data.draw(st.integers(-(2**s) + 1, 2**s - 1))
    g = gcd(a, b)
    a, b = a // g, b // g
    t = 2 * s + 1
    B = data.draw(st.sampled_from([1 << t, (1 << t) + 1, (1 << (t + 5)) - 3]))
    center = Fraction(a, b) * B
    # every integer A with |A/B - a/b| < 2^-t
    radius = Fraction(B, 1 << t)
    lo = center - radius
    A = data.draw(st.integers(int(lo) - 1, int(center + radius) + 1))
    if not abs(Fraction(A) - center) < radius:
        return
    assert rational_reconstruct(A, B, s) == (a, b)


def test_reconstruct_argument_errors():
    with pytest.raises(InvalidArgumentError):
        rational_reconstruct(1, 0, 3)
    with pytest.raises(InvalidArgumentError):
        rational_reconstruct(1, 4, 0)
