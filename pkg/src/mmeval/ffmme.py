"""Multipoint evaluation over a prime field ``F_p``.

The input is lifted to integers in ``[0, p)``. Every true integer evaluation
is then below ``d^m * p * p^(dm)``, so it suffices to evaluate modulo
enough small primes, rebuild the integer by Chinese remaindering and reduce
it mod ``p``. The small-prime evaluations go to a pluggable backend.

When there are very few variables compared to the degree
(``m < log log d``), the polynomial is first rewritten with the inverse
Kronecker map into more variables of smaller degree.
"""

from __future__ import annotations

from typing import Sequence

from .backends import get_backend
from .errors import InvalidArgumentError
from .kronecker import (
    DensePolynomial,
    inverse_kronecker,
    kronecker_parameters,
    needs_small_m_rewrite,
    psi_points,
)
from .numerics import ceil_log2
from .primes import basis_exceeding, crt_reconstruct_many, crt_reduce_many, is_prime

__all__ = [
    "mme_prime_field",
    "mme_gaussian_prime_field",
    "small_prime_pool_size",
    "gaussian_mul",
    "gaussian_pow",
]


def small_prime_pool_size(d: int, m: int, p: int) -> int:
    """Initial pool size ``(dm + 1) ceil(log2 p) + m ceil(log2 d)``."""
    return (d * m + 1) * ceil_log2(p) + m * ceil_log2(d)


def _should_rewrite(kronecker, d, m):
    if d <= 1:
        return False
    if kronecker is None:
        return needs_small_m_rewrite(d, m)
    return bool(kronecker)


def _check_points(points, m):
    points = [tuple(a) for a in points]
    for a in points:
        if len(a) != m:
            raise InvalidArgumentError(f"point {a} has {len(a)} coordinates, expected {m}")
    return points


def _split_rows(flat_rows, n_points, width):
    return [
        [tuple(row[i * width : (i + 1) * width]) for i in range(n_points)]
        for row in flat_rows
    ]


def mme_prime_field(f: DensePolynomial, points: Sequence[Sequence[int]], p: int,
                    backend=None, kronecker: bool | None = None) -> list[int]:
    """Evaluate ``f`` at every point modulo the prime ``p``.

    Parameters
    ----------
    f : DensePolynomial
        Integer coefficients, read modulo ``p``.
    points : sequence of int tuples
        Each of length ``f.m``, read modulo ``p``.
    p : int
        Prime modulus.
    backend : str or MmeBackend, optional
        Evaluator for the small-prime instances (``"horner"`` by default).
    kronecker : bool or None
        Force (True) or suppress (False) the small-``m`` inverse Kronecker
        rewrite; ``None`` applies it when ``m < log2 log2 d``.

    Returns
    -------
    list of int
        ``f(a) mod p`` for each point, in ``[0, p)``.
    """
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    backend = get_backend(backend)
    points = _check_points(points, f.m)
    f = f.map_coeffs(lambda c: c % p)
    points = [tuple(x % p for x in a) for a in points]
    if not points:
        return []

    if _should_rewrite(kronecker, f.d, f.m):
        dp, mp = kronecker_parameters(f.d)
        f = inverse_kronecker(f, dp, mp)
        points = [psi_points(a, dp, mp, modulus=p) for a in points]

    d, m = f.d, f.m
    basis = basis_exceeding(d**m * p ** (d * m + 1), small_prime_pool_size(d, m, p))
    coeff_rows = crt_reduce_many(f.coeffs, basis)
    point_rows = _split_rows(crt_reduce_many([x for a in points for x in a], basis), len(points), m)
    polys = [DensePolynomial(m, d, row) for row in coeff_rows]
    evals = backend.evaluate_many(polys, point_rows, basis.primes)
    return [v % p for v in crt_reconstruct_many(evals, basis)]


def gaussian_mul(u, v, p):
    return ((u[0] * v[0] - u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)


def gaussian_pow(u, e, p):
    result = (1 % p, 0)
    base = (u[0] % p, u[1] % p)
    while e:
        if e & 1:
            result = gaussian_mul(result, base, p)
        base = gaussian_mul(base, base, p)
        e >>= 1
    return result


def mme_gaussian_prime_field(f: DensePolynomial, points, p: int, backend=None,
                             kronecker: bool | None = None) -> list[tuple[int, int]]:
    """Evaluate over ``F_p[z]/(z^2 + 1)``; coefficients and coordinates are ``(re, im)`` pairs.

    The lifted integer evaluation is a Gaussian integer whose components
    are bounded by ``d^m * 2^ceil((dm+1)/2) * p^(dm+1)`` in magnitude, so the
    CRT basis must exceed twice that and reconstruction is signed.
    """
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    backend = get_backend(backend)
    points = _check_points(points, f.m)
    f = f.map_coeffs(lambda c: (c[0] % p, c[1] % p))
    points = [tuple((x[0] % p, x[1] % p) for x in a) for a in points]
    if not points:
        return []

    if _should_rewrite(kronecker, f.d, f.m):
        dp, mp = kronecker_parameters(f.d)
        f = inverse_kronecker(f, dp, mp, zero=(0, 0))
        points = [psi_points(a, dp, mp, power=lambda x, e: gaussian_pow(x, e, p)) for a in points]

    d, m = f.d, f.m
    bound = d**m * (1 << -(-(d * m + 1) // 2)) * p ** (d * m + 1)
    basis = basis_exceeding(2 * bound, small_prime_pool_size(d, m, p) + 1)
    n_coeffs = len(f.coeffs)
    flat = [c[0] for c in f.coeffs] + [c[1] for c in f.coeffs]
    flat += [x[0] for a in points for x in a] + [x[1] for a in points for x in a]
    rows = crt_reduce_many(flat, basis)
    n_coords = len(points) * m
    polys, point_sets = [], []
    for row in rows:
        re_c, im_c = row[:n_coeffs], row[n_coeffs : 2 * n_coeffs]
        polys.append(DensePolynomial(m, d, list(zip(re_c, im_c))))
        pr = row[2 * n_coeffs : 2 * n_coeffs + n_coords]
        pi = row[2 * n_coeffs + n_coords :]
        pairs = list(zip(pr, pi))
        point_sets.append([tuple(pairs[i * m : (i + 1) * m]) for i in range(len(points))])
    evals = backend.evaluate_many_gaussian(polys, point_sets, basis.primes)
    re = crt_reconstruct_many([[v[0] for v in row] for row in evals], basis, signed=True)
    im = crt_reconstruct_many([[v[1] for v in row] for row in evals], basis, signed=True)
    return [(r % p, i % p) for r, i in zip(re, im)]
