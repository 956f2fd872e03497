"""Approximate multipoint evaluation over the reals and complex numbers.

Coefficients are rounded to ``k1`` bits and coordinates to ``k2`` bits. All
denominators are then powers of two and can be cleared to give one integer
polynomial ``G`` and integer points ``a_hat``, with

    G(a_hat) = 2^(k1 + k2*d*m) * round_k1(f)(round_k2(a)).

``G(a_hat)`` is computed exactly by the integer pipeline and shifted back to
``t`` bits. The precision choices

    k1 = ceil(t + m log2 d + 2),   k2 = ceil(t + m log2 d + log2(4md) + 2)

keep each rounding stage within ``2^-(t+2)``. Together with the final
rounding this stays below ``2^-t``.

Complex inputs follow the same pipeline over ``Z[z]/(z^2 + 1)``. A complex
coordinate with both parts in ``(-1, 1)`` can have modulus up to ``sqrt 2``,
so monomials may grow to ``2^(dm/2)``. Both precisions therefore carry
``ceil(dm/2) + 1`` extra bits in that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .backends import get_backend
from .errors import InvalidArgumentError
from .intmme import IntMmeInstance, mme_gaussian_integers, mme_integers
from .kronecker import (
    DensePolynomial,
    exponent_vectors,
    inverse_kronecker,
    kronecker_parameters,
    needs_small_m_rewrite,
)
from .numerics import Dyadic, ceil_log2, round_shift
from .oracle import ZERO, ApproximationOracle, ComplexOracle, power_oracle

__all__ = [
    "ApproxInstance",
    "ScaledIntegerInstance",
    "precision_parameters",
    "round_poly",
    "round_point",
    "rewrite_small_m",
    "scale_instance",
    "approx_mme_real",
    "approx_mme_complex",
]


@dataclass(frozen=True)
class ApproxInstance:
    """Oracle-valued polynomial, oracle-valued points and target bits ``t``."""

    f: DensePolynomial
    points: tuple
    t: int

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(a) for a in self.points))
        if self.t < 1:
            raise InvalidArgumentError(f"accuracy t must be >= 1, got {self.t}")
        for a in self.points:
            if len(a) != self.f.m:
                raise InvalidArgumentError(f"point has {len(a)} coordinates, expected {self.f.m}")


@dataclass(frozen=True)
class ScaledIntegerInstance:
    """The cleared-denominator integer instance plus the bookkeeping to undo it.

    ``B / 2^shift`` is the ``t``-bit answer for each ``B = G(a_hat)``.
    """

    G: DensePolynomial
    hat_points: tuple
    k1: int
    k2: int
    s: int
    t: int

    @property
    def shift(self) -> int:
        return self.k1 + self.k2 * self.G.d * self.G.m - self.t


def precision_parameters(t: int, d: int, m: int, extra: int = 0) -> tuple[int, int]:
    """``(k1, k2)`` for target accuracy ``t``, plus ``extra`` guard bits on both."""
    dm = d**m
    k1 = t + 2 + ceil_log2(dm) + extra
    k2 = t + 2 + ceil_log2(dm * 4 * m * d) + extra
    return k1, k2


def round_poly(f: DensePolynomial, k: int) -> DensePolynomial:
    """Replace each oracle coefficient by its ``k``-bit dyadic approximation."""
    if k < 1:
        raise InvalidArgumentError(f"precision must be >= 1, got {k}")
    return f.map_coeffs(lambda c: Dyadic(c.query(k), k))


def round_point(a: Sequence[ApproximationOracle], k: int, d: int) -> tuple[Dyadic, ...]:
    """Coordinatewise ``k``-bit approximation; requires ``2^k > 4 d^2 m^2``."""
    m = len(a)
    if (1 << k) <= 4 * d * d * m * m:
        raise InvalidArgumentError(f"2^{k} must exceed 4 d^2 m^2 = {4 * d * d * m * m}")
    return tuple(Dyadic(x.query(k), k) for x in a)


def rewrite_small_m(f: DensePolynomial, points, kronecker: bool | None = None, zero=ZERO):
    """Apply the inverse Kronecker rewrite when ``m`` is too small for ``d``.

    Point coordinates become power oracles ``a**(d'**j)``. Returns the
    possibly rewritten ``(f, points)``.
    """
    d, m = f.d, f.m
    apply = needs_small_m_rewrite(d, m) if kronecker is None else bool(kronecker)
    if not apply or d <= 1:
        return f, points
    dp, mp = kronecker_parameters(d)
    g = inverse_kronecker(f, dp, mp, zero=zero)
    new_points = [
        tuple(power_oracle(x, dp**j) for x in a for j in range(mp)) for a in points
    ]
    return g, new_points


def _scale_exponents(d, m, k2):
    top = k2 * d * m
    return [top - k2 * sum(e) for e in exponent_vectors(m, d)]


def scale_instance(f: DensePolynomial, points, t: int) -> ScaledIntegerInstance:
    """Round at ``(k1, k2)`` and clear the power-of-two denominators."""
    d, m = f.d, f.m
    k1, k2 = precision_parameters(t, d, m)
    g = [c.mantissa for c in round_poly(f, k1).coeffs]
    hat = tuple(tuple(x.mantissa for x in round_point(a, k2, d)) for a in points)
    G = DensePolynomial(m, d, [gi << sh for gi, sh in zip(g, _scale_exponents(d, m, k2))])
    return ScaledIntegerInstance(G, hat, k1, k2, 3 * k2 * d * m, t)


def approx_mme_real(inst: ApproxInstance, backend=None, kronecker: bool | None = None) -> list[int]:
    """Integers ``b`` with ``|f(a) - b / 2^t| < 2^-t`` for every point.

    ``kronecker`` controls the small-``m`` rewrite at the oracle level (None
    means automatic). A constant polynomial skips the pipeline and returns
    its coefficient rounded to ``t`` bits.
    """
    backend = get_backend(backend)
    f, points, t = inst.f, list(inst.points), inst.t
    if not points:
        return []
    if f.d == 1:
        return [f.coeffs[0].query(t)] * len(points)
    f, points = rewrite_small_m(f, points, kronecker)
    scaled = scale_instance(f, points, t)
    B = mme_integers(IntMmeInstance(scaled.G, scaled.hat_points, scaled.s), backend)
    return [round_shift(x, scaled.shift) for x in B]


def scale_complex_instance(f: DensePolynomial, points, t: int) -> ScaledIntegerInstance:
    """Gaussian analogue of :func:`scale_instance`; entries are ``(re, im)`` integer pairs."""
    d, m = f.d, f.m
    extra = -(-(d * m) // 2) + 1
    k1, k2 = precision_parameters(t, d, m, extra)
    if (1 << k2) <= 4 * d * d * m * m:
        raise InvalidArgumentError("precision too small for the point-rounding bound")
    coeffs = []
    for c, sh in zip(f.coeffs, _scale_exponents(d, m, k2)):
        coeffs.append((c.real.query(k1) << sh, c.imag.query(k1) << sh))
    hat = tuple(tuple((x.real.query(k2), x.imag.query(k2)) for x in a) for a in points)
    return ScaledIntegerInstance(DensePolynomial(m, d, coeffs), hat, k1, k2, 3 * k2 * d * m, t)


def approx_mme_complex(f: DensePolynomial, points, t: int, backend=None) -> list[tuple[int, int]]:
    """Pairs ``(b, c)`` with real and imaginary errors each below ``2^-t``.

    ``f`` has :class:`ComplexOracle` coefficients and the points are tuples of
    :class:`ComplexOracle`.
    """
    backend = get_backend(backend)
    if t < 1:
        raise InvalidArgumentError(f"accuracy t must be >= 1, got {t}")
    points = [tuple(a) for a in points]
    for a in points:
        if len(a) != f.m:
            raise InvalidArgumentError(f"point has {len(a)} coordinates, expected {f.m}")
        for x in a:
            if not isinstance(x, ComplexOracle):
                raise InvalidArgumentError(f"expected ComplexOracle coordinates, got {type(x).__name__}")
    if not points:
        return []
    if f.d == 1:
        c = f.coeffs[0]
        return [(c.real.query(t), c.imag.query(t))] * len(points)
    scaled = scale_complex_instance(f, points, t)
    B = mme_gaussian_integers(scaled.G, scaled.hat_points, scaled.s, backend)
    return [(round_shift(re, scaled.shift), round_shift(im, scaled.shift)) for re, im in B]
