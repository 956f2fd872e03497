"""Continued fractions, convergents and rational number reconstruction."""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvalidArgumentError, ReconstructionFailedError

__all__ = [
    "Convergent",
    "quotient_sequence",
    "continued_fraction_value",
    "convergent",
    "convergents",
    "rational_reconstruct",
]


class Convergent(NamedTuple):
    a: int
    b: int
    index: int


def quotient_sequence(a: int, b: int) -> list[int]:
    """Euclidean quotients of ``(a, b)``, i.e. the continued fraction of ``a/b``.

    Classical Euclid, quadratic in the bit size. The result is in canonical
    form: a trailing ``[..., q, 1]`` is folded to ``[..., q + 1]``.
    """
    if a <= 0 or b <= 0:
        raise InvalidArgumentError(f"quotient_sequence needs a, b > 0, got ({a}, {b})")
    qs = []
    while b:
        q, r = divmod(a, b)
        qs.append(q)
        a, b = b, r
    if len(qs) >= 2 and qs[-1] == 1:
        qs.pop()
        qs[-1] += 1
    return qs


def continued_fraction_value(qs):
    """Fold ``[q1, ..., qt]`` back into a reduced ``(numerator, denominator)``."""
    num, den = 1, 0
    for q in reversed(qs):
        num, den = q * num + den, num
    return num, den


def _matrix_product(qs, lo, hi):
    # product of [[q, 1], [1, 0]] for qs[lo:hi], split down the middle
    if hi - lo == 1:
        return (qs[lo], 1, 1, 0)
    mid = (lo + hi) // 2
    a, b, c, d = _matrix_product(qs, lo, mid)
    e, f, g, h = _matrix_product(qs, mid, hi)
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _convergent_from_quotients(qs, i):
    a, _, b, _ = _matrix_product(qs, 0, i)
    return Convergent(a, b, i)


def convergent(M: int, N: int, i: int) -> Convergent:
    """The ``i``-th convergent (1-based) of ``M/N`` via a balanced 2x2 matrix product."""
    qs = quotient_sequence(M, N)
    if not 1 <= i <= len(qs):
        raise InvalidArgumentError(f"convergent index {i} outside 1..{len(qs)}")
    return _convergent_from_quotients(qs, i)


def convergents(qs):
    """All convergents of a quotient sequence by the three-term recurrence."""
    out = []
    a2, a1, b2, b1 = 0, 1, 1, 0
    for i, q in enumerate(qs, start=1):
        a2, a1 = a1, q * a1 + a2
        b2, b1 = b1, q * b1 + b2
        out.append(Convergent(a1, b1, i))
    return out


def rational_reconstruct(A: int, B: int, s: int) -> tuple[int, int]:
    """Recover the reduced ``a/b`` with ``b < 2^s`` within ``2^-(2s+1)`` of ``A/B``.

    Binary-searches the convergents of ``|A|/B`` for the last one whose
    denominator is below ``2^s``, then restores the sign of ``A``.

    Raises
    ------
    ReconstructionFailedError
        If the selected convergent is not within ``2^-(2s+1)`` of ``A/B``,
        meaning no fraction satisfied the precondition.
    """
    if B <= 0:
        raise InvalidArgumentError(f"denominator must be positive, got {B}")
    if s < 1:
        raise InvalidArgumentError(f"s must be >= 1, got {s}")
    if A == 0:
        return 0, 1
    sign = -1 if A < 0 else 1
    qs = quotient_sequence(abs(A), B)
    limit = 1 << s
    # denominators strictly increase from index 2 on; index 1 has b = 1
    best = 1
    lo, hi = 2, len(qs)
    while lo <= hi:
        mid = (lo + hi) // 2
        if _convergent_from_quotients(qs, mid).b < limit:
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    a, b, _ = _convergent_from_quotients(qs, best)
    # |A/B - a/b| < 2^-(2s+1)  <=>  |A*b - a*B| * 2^(2s+1) < B*b
    if abs(abs(A) * b - a * B) << (2 * s + 1) >= B * b:
        raise ReconstructionFailedError(
            f"no fraction with denominator < 2^{s} lies within 2^-{2 * s + 1} of {A}/{B}"
        )
    return sign * a, b
