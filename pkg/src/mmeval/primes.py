"""Prime generation and multi-modular reduction/reconstruction.

A :class:`CrtBasis` owns a balanced product tree over its moduli. Reduction
walks the tree top-down (a remainder tree) and reconstruction walks it
bottom-up, merging sibling residues with a precomputed inverse per internal
node. Both directions accept batches so the tree is traversed once for all
coefficients or all coordinates of an instance.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .errors import InvalidArgumentError, PoolExhaustedError

__all__ = [
    "prime_sieve",
    "first_k_primes",
    "is_prime",
    "CrtBasis",
    "crt_basis_for_bound",
    "basis_exceeding",
    "crt_reduce",
    "crt_reduce_many",
    "crt_reconstruct",
    "crt_reconstruct_signed",
    "crt_reconstruct_many",
]


def prime_sieve(n: int) -> list[int]:
    """All primes strictly less than ``n``, ascending (Eratosthenes)."""
    if n <= 1:
        raise InvalidArgumentError(f"prime_sieve needs n > 1, got {n}")
    flags = bytearray([1]) * n
    flags[0] = 0
    flags[1] = 0
    for i in range(2, math.isqrt(n - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, n, i)))
    return [i for i, f in enumerate(flags) if f]


def _kth_prime_upper_bound(k: int) -> int:
    if k < 6:
        return 13
    return int(k * (math.log(k) + math.log(math.log(k)))) + 1


@lru_cache(maxsize=64)
def _first_k_primes(k: int) -> tuple[int, ...]:
    bound = _kth_prime_upper_bound(k)
    while True:
        primes = prime_sieve(bound + 1)
        if len(primes) >= k:
            return tuple(primes[:k])
        bound *= 2


def first_k_primes(k: int) -> list[int]:
    """The first ``k`` primes ``2, 3, 5, ...``."""
    if k < 1:
        raise InvalidArgumentError(f"first_k_primes needs k >= 1, got {k}")
    return list(_first_k_primes(k))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Primality test, deterministic for ``n < 3.3e24``.

    Miller-Rabin with the first thirteen primes as witnesses is proven exact
    below 3.3e24. Larger inputs get the same witnesses, which is only a strong
    probable-prime check.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CrtBasis:
    """Ordered distinct primes with a cached product tree.

    ``levels[0]`` holds the primes, each following level the pairwise products
    of the previous one (an unpaired last node is carried up unchanged), and
    ``levels[-1][0]`` is the modulus ``M``.
    """

    def __init__(self, primes: Sequence[int]):
        primes = [int(p) for p in primes]
        if not primes:
            raise InvalidArgumentError("CrtBasis needs at least one prime")
        if len(set(primes)) != len(primes):
            raise InvalidArgumentError("CrtBasis primes must be distinct")
        self.primes = tuple(primes)
        levels = [list(primes)]
        while len(levels[-1]) > 1:
            prev = levels[-1]
            nxt = [prev[i] * prev[i + 1] for i in range(0, len(prev) - 1, 2)]
            if len(prev) % 2:
                nxt.append(prev[-1])
            levels.append(nxt)
        self.levels = tuple(tuple(lv) for lv in levels)
        # inverse of the left child modulo the right child, per merged node
        self._merge_inv = tuple(
            tuple(pow(lv[2 * j], -1, lv[2 * j + 1]) for j in range(len(lv) // 2))
            for lv in levels[:-1]
        )

    @property
    def modulus(self) -> int:
        return self.levels[-1][0]

    M = modulus

    def __len__(self):
        return len(self.primes)

    def __repr__(self):
        return f"CrtBasis(L={len(self.primes)}, M~2^{self.modulus.bit_length()})"


def crt_basis_for_bound(bound: int, prime_pool: Sequence[int]) -> CrtBasis:
    """Basis over the shortest prefix of ``prime_pool`` whose product exceeds ``bound``."""
    prod = 1
    for i, p in enumerate(prime_pool):
        prod *= p
        if prod > bound:
            return CrtBasis(prime_pool[: i + 1])
    raise PoolExhaustedError(
        f"product of {len(prime_pool)} pooled primes does not exceed a {int(bound).bit_length()}-bit bound"
    )


@lru_cache(maxsize=512)
def _prefix_basis(length: int) -> CrtBasis:
    return CrtBasis(_first_k_primes(length))


def basis_exceeding(bound: int, pool_size: int) -> CrtBasis:
    """Minimal prefix basis with ``M > bound`` drawn from the first ``pool_size`` primes.

    The pool doubles until it is large enough. Prefix bases are cached by
    length, so repeated calls with similar bounds reuse product trees.
    """
    pool_size = max(1, pool_size)
    while True:
        pool = _first_k_primes(pool_size)
        prod = 1
        for i, p in enumerate(pool):
            prod *= p
            if prod > bound:
                return _prefix_basis(i + 1)
        pool_size *= 2


def crt_reduce_many(values: Sequence[int], basis: CrtBasis) -> list[list[int]]:
    """Residues of every value modulo every basis prime.

    Returns a prime-major table: ``out[l][j] == values[j] % basis.primes[l]``.
    Negative values wrap into ``[0, p)``.
    """
    levels = basis.levels
    top = levels[-1][0]
    current = [[v % top for v in values]]
    for depth in range(len(levels) - 2, -1, -1):
        lv = levels[depth]
        nxt = []
        carried = len(lv) - 1 if len(lv) % 2 else -1
        for j, node in enumerate(lv):
            parent = current[j // 2]
            # a carried node has the same modulus as its parent
            nxt.append(parent if j == carried else [r % node for r in parent])
        current = nxt
    return current


def crt_reduce(n: int, basis: CrtBasis) -> list[int]:
    """``[n mod p for p in basis.primes]`` via remainder-tree descent."""
    return [col[0] for col in crt_reduce_many([n], basis)]


def crt_reconstruct_many(residues: Sequence[Sequence[int]], basis: CrtBasis, signed: bool = False) -> list[int]:
    """Combine a prime-major residue table into integers.

    ``residues[l][j]`` is the residue of the ``j``-th unknown modulo
    ``basis.primes[l]``. Results lie in ``[0, M)``, or in ``(-M/2, M/2]`` when
    ``signed`` is true.
    """
    if len(residues) != len(basis.primes):
        raise InvalidArgumentError(
            f"expected {len(basis.primes)} residue rows, got {len(residues)}"
        )
    for p, row in zip(basis.primes, residues):
        for r in row:
            if not 0 <= r < p:
                raise InvalidArgumentError(f"residue {r} out of range for modulus {p}")
    levels = basis.levels
    current = [list(row) for row in residues]
    for depth in range(len(levels) - 1):
        lv = levels[depth]
        invs = basis._merge_inv[depth]
        nxt = []
        for j in range(len(lv) // 2):
            m1, m2, inv = lv[2 * j], lv[2 * j + 1], invs[j]
            left, right = current[2 * j], current[2 * j + 1]
            nxt.append([u + m1 * ((v - u) * inv % m2) for u, v in zip(left, right)])
        if len(lv) % 2:
            nxt.append(current[-1])
        current = nxt
    out = current[0]
    if signed:
        M = basis.modulus
        half = M // 2
        out = [r - M if r > half else r for r in out]
    return out


def crt_reconstruct(residues: Sequence[int], basis: CrtBasis) -> int:
    """The unique ``N`` in ``[0, M)`` with ``N = residues[i] (mod p_i)``."""
    return crt_reconstruct_many([[r] for r in residues], basis)[0]


def crt_reconstruct_signed(residues: Sequence[int], basis: CrtBasis) -> int:
    """Like :func:`crt_reconstruct` but returns the representative in ``(-M/2, M/2]``."""
    return crt_reconstruct_many([[r] for r in residues], basis, signed=True)[0]
