"""Exact multipoint evaluation over the integers with a known output bit bound."""

from __future__ import annotations

from dataclasses import dataclass

from .backends import get_backend
from .errors import BoundViolationError, InvalidArgumentError
from .ffmme import mme_gaussian_prime_field, mme_prime_field
from .kronecker import DensePolynomial
from .numerics import ceil_log2
from .primes import basis_exceeding, crt_reconstruct_many, crt_reduce_many

__all__ = [
    "IntMmeInstance",
    "mme_integers",
    "mme_gaussian_integers",
    "naive_output_bound",
]


def naive_output_bound(d: int, m: int, s: int) -> int:
    """``ceil(s*d*m + s + m*log2 d)``, a bit bound on evaluations of ``s``-bit inputs.

    A constant polynomial (``d == 1``) just returns ``s``.
    """
    if d <= 1:
        return s
    return s * d * m + s + ceil_log2(d**m)


@dataclass(frozen=True)
class IntMmeInstance:
    """Integer polynomial, integer points and a bit bound ``s``.

    Coefficients and coordinates are checked to lie strictly inside
    ``(-2^s, 2^s)``. That the evaluations do too is the caller's promise.
    """

    f: DensePolynomial
    points: tuple
    s: int

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(a) for a in self.points))
        if self.s < 1:
            raise InvalidArgumentError(f"bit bound s must be >= 1, got {self.s}")
        limit = 1 << self.s
        for c in self.f.coeffs:
            if not isinstance(c, int) or abs(c) >= limit:
                raise InvalidArgumentError(f"coefficient {c!r} is not an integer below 2^{self.s}")
        for a in self.points:
            if len(a) != self.f.m:
                raise InvalidArgumentError(f"point {a} has {len(a)} coordinates, expected {self.f.m}")
            for x in a:
                if not isinstance(x, int) or abs(x) >= limit:
                    raise InvalidArgumentError(f"coordinate {x!r} is not an integer below 2^{self.s}")


def _check_bound(values, s):
    limit = 1 << s
    for v in values:
        if abs(v) >= limit:
            raise BoundViolationError(
                f"reconstructed value of {v.bit_length()} bits breaks the declared bound 2^{s}"
            )


def mme_integers(inst: IntMmeInstance, backend=None, kronecker: bool | None = None) -> list[int]:
    """Exact ``f(a)`` for every point of ``inst``.

    Reduces the instance modulo the shortest run of leading primes whose
    product exceeds ``2^(s+1)``, solves each prime-field instance and lifts
    the results back into ``(-M/2, M/2]``.

    Raises
    ------
    BoundViolationError
        When a reconstructed value has magnitude ``>= 2^s``. Detection is
        best effort: a dishonest ``s`` may also wrap to an in-range value.
    """
    backend = get_backend(backend)
    f, points, s = inst.f, inst.points, inst.s
    if not points:
        return []
    if f.d == 1:
        return [f.coeffs[0]] * len(points)

    basis = basis_exceeding(1 << (s + 1), s)
    m = f.m
    coeff_rows = crt_reduce_many(f.coeffs, basis)
    coord_rows = crt_reduce_many([x for a in points for x in a], basis)
    evals = []
    for p, crow, arow in zip(basis.primes, coeff_rows, coord_rows):
        fp = DensePolynomial(m, f.d, crow)
        pts = [tuple(arow[i * m : (i + 1) * m]) for i in range(len(points))]
        evals.append(mme_prime_field(fp, pts, p, backend, kronecker))
    out = crt_reconstruct_many(evals, basis, signed=True)
    _check_bound(out, s)
    return out


def mme_gaussian_integers(f: DensePolynomial, points, s: int, backend=None,
                          kronecker: bool | None = None) -> list[tuple[int, int]]:
    """Exact evaluation over ``Z[z]/(z^2 + 1)``.

    Coefficients and coordinates are ``(re, im)`` integer pairs. ``s`` bounds
    every component of inputs and outputs.
    """
    backend = get_backend(backend)
    if s < 1:
        raise InvalidArgumentError(f"bit bound s must be >= 1, got {s}")
    points = [tuple(tuple(x) for x in a) for a in points]
    limit = 1 << s
    for c in f.coeffs:
        if abs(c[0]) >= limit or abs(c[1]) >= limit:
            raise InvalidArgumentError(f"coefficient {c} exceeds 2^{s}")
    for a in points:
        if len(a) != f.m:
            raise InvalidArgumentError(f"point {a} has {len(a)} coordinates, expected {f.m}")
        for x in a:
            if abs(x[0]) >= limit or abs(x[1]) >= limit:
                raise InvalidArgumentError(f"coordinate {x} exceeds 2^{s}")
    if not points:
        return []
    if f.d == 1:
        return [tuple(f.coeffs[0])] * len(points)

    basis = basis_exceeding(1 << (s + 1), s)
    m, n_coeffs, n_coords = f.m, len(f.coeffs), len(points) * f.m
    flat = [c[0] for c in f.coeffs] + [c[1] for c in f.coeffs]
    flat += [x[0] for a in points for x in a] + [x[1] for a in points for x in a]
    rows = crt_reduce_many(flat, basis)
    evals_re, evals_im = [], []
    for p, row in zip(basis.primes, rows):
        fp = DensePolynomial(m, f.d, list(zip(row[:n_coeffs], row[n_coeffs : 2 * n_coeffs])))
        pairs = list(zip(row[2 * n_coeffs : 2 * n_coeffs + n_coords], row[2 * n_coeffs + n_coords :]))
        pts = [tuple(pairs[i * m : (i + 1) * m]) for i in range(len(points))]
        vals = mme_gaussian_prime_field(fp, pts, p, backend, kronecker)
        evals_re.append([v[0] for v in vals])
        evals_im.append([v[1] for v in vals])
    re = crt_reconstruct_many(evals_re, basis, signed=True)
    im = crt_reconstruct_many(evals_im, basis, signed=True)
    _check_bound(re, s)
    _check_bound(im, s)
    return list(zip(re, im))
