"""Dense multivariate polynomials and the base-``d`` Kronecker maps.

Coefficients are stored flat in row-major exponent order (the last variable
varies fastest), so the coefficient of ``x^e`` sits at index
``sum(e[j] * d**(m-1-j))``.

The inverse Kronecker map sends a ``c``-variate polynomial of individual
degree ``< d**m`` to a ``c*m``-variate one of individual degree ``< d`` by
writing each exponent in base ``d``. Digit ``j`` of the ``i``-th exponent
becomes the exponent of ``x[i*m + j]``, the coordinate that :func:`psi_points`
fills with ``a_i ** (d**j)``. With that pairing
``inverse_kronecker(f)(psi_points(a)) == f(a)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .errors import InvalidArgumentError

__all__ = [
    "DensePolynomial",
    "exponent_vectors",
    "exponent_index",
    "inverse_kronecker",
    "forward_kronecker",
    "psi_points",
    "kronecker_parameters",
    "needs_small_m_rewrite",
]


def exponent_vectors(m: int, d: int):
    """All exponent vectors in ``[0, d)^m`` in storage order."""
    return itertools.product(range(d), repeat=m)


def exponent_index(e: Sequence[int], d: int) -> int:
    idx = 0
    for ej in e:
        idx = idx * d + ej
    return idx


@dataclass(frozen=True)
class DensePolynomial:
    """An ``m``-variate polynomial with individual degree ``< d``.

    ``coeffs`` has exactly ``d**m`` entries. The coefficient type is not
    fixed: ints, Fractions, modular residues, (re, im) pairs and
    approximation oracles all appear in different pipelines.
    """

    m: int
    d: int
    coeffs: tuple

    def __post_init__(self):
        if self.m < 0 or self.d < 1:
            raise InvalidArgumentError(f"need m >= 0 and d >= 1, got m={self.m}, d={self.d}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.d ** self.m:
            raise InvalidArgumentError(
                f"expected d^m = {self.d ** self.m} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_terms(cls, m: int, d: int, terms: dict, zero: Any = 0) -> "DensePolynomial":
        """Build from a mapping ``{exponent_vector: coefficient}``."""
        coeffs = [zero] * (d**m)
        for e, c in terms.items():
            if len(e) != m or any(not 0 <= ej < d for ej in e):
                raise InvalidArgumentError(f"exponent {e} outside [0, {d})^{m}")
            coeffs[exponent_index(e, d)] = c
        return cls(m, d, coeffs)

    def coefficient(self, e: Sequence[int]):
        return self.coeffs[exponent_index(e, self.d)]

    def terms(self):
        """Pairs ``(exponent_vector, coefficient)`` in storage order."""
        return zip(exponent_vectors(self.m, self.d), self.coeffs)

    def map_coeffs(self, fn: Callable) -> "DensePolynomial":
        return DensePolynomial(self.m, self.d, [fn(c) for c in self.coeffs])

    def evaluate(self, point: Sequence, modulus: int | None = None):
        """Nested Horner evaluation over any ring supporting ``+`` and ``*``."""
        if len(point) != self.m:
            raise InvalidArgumentError(f"point has {len(point)} coordinates, expected {self.m}")
        vals = list(self.coeffs)
        d = self.d
        for x in reversed(point):
            nxt = []
            for i in range(0, len(vals), d):
                acc = vals[i + d - 1]
                for c in reversed(vals[i : i + d - 1]):
                    acc = acc * x + c
                    if modulus is not None:
                        acc %= modulus
                nxt.append(acc)
            vals = nxt
        out = vals[0]
        return out % modulus if modulus is not None else out


def _digits(n: int, d: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        n, r = divmod(n, d)
        out.append(r)
    return out


def inverse_kronecker(f: DensePolynomial, d: int, m: int, zero: Any = 0) -> DensePolynomial:
    """Trade degree for variables: ``c`` variables of degree ``< d**m`` become ``c*m`` of degree ``< d``.

    Monomials absent from ``f`` (because ``f.d < d**m``) get ``zero``.
    """
    if d < 1 or m < 1:
        raise InvalidArgumentError("inverse_kronecker needs d >= 1 and m >= 1")
    if f.d > d**m:
        raise InvalidArgumentError(f"individual degree bound {f.d} exceeds d^m = {d ** m}")
    c = f.m
    coeffs = [zero] * (d ** (c * m))
    for e, coef in f.terms():
        digits = []
        for ei in e:
            digits.extend(_digits(ei, d, m))
        coeffs[exponent_index(digits, d)] = coef
    return DensePolynomial(c * m, d, coeffs)


def forward_kronecker(g: DensePolynomial, d: int, m: int, zero: Any = 0) -> DensePolynomial:
    """Collapse ``c*m`` variables of degree ``< d`` into ``c`` variables of degree ``< d**m``."""
    if g.d > d:
        raise InvalidArgumentError(f"individual degree bound {g.d} exceeds d = {d}")
    if m < 1 or g.m % m:
        raise InvalidArgumentError(f"{g.m} variables do not split into blocks of {m}")
    c = g.m // m
    D = d**m
    coeffs = [zero] * (D**c)
    for e, coef in g.terms():
        target = [
            sum(e[i * m + j] * d**j for j in range(m)) for i in range(c)
        ]
        idx = exponent_index(target, D)
        coeffs[idx] = coeffs[idx] + coef
    return DensePolynomial(c, D, coeffs)


def psi_points(a: Sequence, d: int, m: int, modulus: int | None = None,
               power: Callable | None = None) -> tuple:
    """Point map companion to :func:`inverse_kronecker`.

    Each coordinate ``a_i`` expands to ``(a_i, a_i**d, ..., a_i**(d**(m-1)))``
    by repeated ``d``-th powering. ``power(x, d)`` overrides the powering
    step, which lets callers plug in ring arithmetic such as Gaussian
    integers mod ``p``.
    """
    if power is None:
        if modulus is None:
            power = lambda x, e: x**e
        else:
            power = lambda x, e: pow(x, e, modulus)
    out = []
    for ai in a:
        cur = ai % modulus if modulus is not None and isinstance(ai, int) else ai
        for j in range(m):
            out.append(cur)
            if j + 1 < m:
                cur = power(cur, d)
    return tuple(out)


def kronecker_parameters(d: int) -> tuple[int, int]:
    """``(d', m')`` with ``d' = max(2, floor(log2 d))`` and ``m'`` minimal such that ``d'**m' > d``."""
    dp = max(2, d.bit_length() - 1)
    mp = 1
    while dp**mp <= d:
        mp += 1
    return dp, mp


def needs_small_m_rewrite(d: int, m: int) -> bool:
    """Whether ``m < log2 log2 d``; degrees below 16 never trigger."""
    if d < 16:
        return False
    return m < math.log2(math.log2(d))
