import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import trial_division_primes
from mmeval.errors import InvalidArgumentError, PoolExhaustedError
from mmeval.primes import (
    CrtBasis,
    basis_exceeding,
    crt_basis_for_bound,
    crt_reconstruct,
    crt_reconstruct_many,
    crt_reconstruct_signed,
    crt_reduce,
    crt_reduce_many,
    first_k_primes,
    is_prime,
    prime_sieve,
)

PRIMES_10K = trial_division_primes(10_000)


def test_sieve_examples():
    assert prime_sieve(3) == [2]
    assert prime_sieve(10) == [2, 3, 5, 7]
    p100 = prime_sieve(100)
    assert len(p100) == 25 and p100[-1] == 97


@pytest.mark.parametrize("n", [2, 3, 4, 5, 17, 18, 100, 997, 1000, 4096, 10_000])
def test_sieve_matches_trial_division(n):
    assert prime_sieve(n) == [p for p in PRIMES_10K if p < n]


def test_sieve_rejects_small_bound():
    with pytest.raises(InvalidArgumentError):
        prime_sieve(1)


def test_first_k_primes():
    assert first_k_primes(1) == [2]
    assert first_k_primes(5) == [2, 3, 5, 7, 11]
    ks = first_k_primes(1000)
    assert len(ks) == 1000 and ks[-1] == 7919
    assert ks == PRIMES_10K[:1000]
    for k in range(1, 40):
        assert first_k_primes(k) == PRIMES_10K[:k]


def test_is_prime_agrees_with_trial_division():
    ps = set(PRIMES_10K)
    assert all(is_prime(n) == (n in ps) for n in range(-3, 10_000))
    assert is_prime(2**31 - 1) and is_prime(2**61 - 1) and not is_prime(2**32 + 1)


def test_basis_for_bound_examples():
    b = crt_basis_for_bound(5, [2, 3, 5, 7])
    assert b.primes == (2, 3) and b.M == 6
    b = crt_basis_for_bound(30, [2, 3, 5, 7])
    assert b.primes == (2, 3, 5, 7) and b.M == 210


def test_basis_for_2_128_is_minimal_prefix():
    pool = PRIMES_10K[:100]
    # cumulative product oracle
    prod, n = 1, 0
    while prod <= 2**128:
        prod *= pool[n]
        n += 1
    b = crt_basis_for_bound(2**128, pool)
    assert b.primes == tuple(pool[:n]) and b.M == prod
    assert b.M // b.primes[-1] <= 2**128


def test_basis_pool_exhausted():
    with pytest.raises(PoolExhaustedError):
        crt_basis_for_bound(10**9, [2, 3, 5, 7])


@given(st.integers(1, 2**600), st.integers(1, 8))
def test_basis_exceeding_minimal(bound, pool):
    b = basis_exceeding(bound, pool)
    assert b.M > bound
    assert b.M // b.primes[-1] <= bound
    assert b.primes == tuple(PRIMES_10K[: len(b)])


def test_product_tree_structure():
    b = CrtBasis([3, 5, 7, 11, 13])
    assert b.levels[0] == (3, 5, 7, 11, 13)
    assert b.levels[-1] == (15015,)
    assert len(b) == 5
    with pytest.raises(InvalidArgumentError):
        CrtBasis([3, 3])
    with pytest.raises(InvalidArgumentError):
        CrtBasis([])


def test_reduce_and_reconstruct_examples():
    b357 = CrtBasis([3, 5, 7])
    assert crt_reduce(23, b357) == [2, 3, 2]
    assert crt_reduce(0, b357) == [0, 0, 0]
    assert crt_reconstruct([2, 3, 2], b357) == 23
    assert crt_reconstruct([0, 0, 0], b357) == 0
    assert crt_reconstruct([1, 1], CrtBasis([2, 3])) == 1
    b35 = CrtBasis([3, 5])
    assert crt_reduce(-1, b35) == [2, 4]
    assert crt_reconstruct_signed([2, 4], b35) == -1
    assert crt_reconstruct_signed(crt_reduce(7, b35), b35) == 7
    big = basis_exceeding(2**41, 1)
    assert crt_reconstruct_signed(crt_reduce(-(2**40), big), big) == -(2**40)


def test_reconstruct_rejects_bad_residues():
    b = CrtBasis([3, 5])
    with pytest.raises(InvalidArgumentError):
        crt_reconstruct([3, 0], b)
    with pytest.raises(InvalidArgumentError):
        crt_reconstruct([-1, 0], b)
    with pytest.raises(InvalidArgumentError):
        crt_reconstruct([1], b)


@settings(max_examples=60)
@given(st.integers(1, 60), st.data())
def test_reduce_matches_schoolbook_and_roundtrips(L, data):
    basis = CrtBasis(PRIMES_10K[:L])
    M = basis.M
    values = data.draw(st.lists(st.integers(-(M // 2) + 1, M // 2), min_size=1, max_size=6))
    table = crt_reduce_many(values, basis)
    assert table == [[v % p for v in values] for p in basis.primes]
    assert crt_reconstruct_many(table, basis, signed=True) == values
    assert crt_reconstruct_many(table, basis) == [v % M for v in values]
