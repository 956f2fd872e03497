"""Exact multipoint evaluation over the rationals with a known output bit bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .approx import ApproxInstance, approx_mme_real
from .errors import InvalidArgumentError
from .kronecker import DensePolynomial
from .oracle import RationalOracle
from .ratrecon import rational_reconstruct

__all__ = ["RatMmeInstance", "mme_rationals", "approximate_rationals"]


@dataclass(frozen=True)
class RatMmeInstance:
    """Rational polynomial and points, all entries in ``[-1, 1]``.

    Numerators and denominators of the inputs must be below ``2^s``; the
    same bound for the evaluations is the caller's promise.
    """

    f: DensePolynomial
    points: tuple
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise InvalidArgumentError(f"bit bound s must be >= 1, got {self.s}")
        object.__setattr__(self, "f", self.f.map_coeffs(Fraction))
        object.__setattr__(self, "points", tuple(tuple(Fraction(x) for x in a) for a in self.points))
        for x in self.f.coeffs:
            self._check(x, "coefficient")
        for a in self.points:
            if len(a) != self.f.m:
                raise InvalidArgumentError(f"point has {len(a)} coordinates, expected {self.f.m}")
            for x in a:
                self._check(x, "coordinate")

    def _check(self, x, what):
        limit = 1 << self.s
        if abs(x) > 1:
            raise InvalidArgumentError(f"{what} {x} is outside [-1, 1]")
        if abs(x.numerator) >= limit or x.denominator >= limit:
            raise InvalidArgumentError(f"{what} {x} needs more than {self.s} bits")


def approximate_rationals(inst: RatMmeInstance, backend=None) -> list[int]:
    """The intermediate integers ``B`` with ``|f(a) - B / 2^(2s+1)| < 2^-(2s+1)``."""
    f = inst.f.map_coeffs(RationalOracle)
    points = [tuple(RationalOracle(x) for x in a) for a in inst.points]
    return approx_mme_real(ApproxInstance(f, points, 2 * inst.s + 1), backend)


def mme_rationals(inst: RatMmeInstance, backend=None) -> list[Fraction]:
    """Exact reduced values ``f(a)`` for every point.

    Raises ``ReconstructionFailedError`` when the declared ``s`` is too small
    for some evaluation.
    """
    t = 2 * inst.s + 1
    out = []
    for B in approximate_rationals(inst, backend):
        a, b = rational_reconstruct(B, 1 << t, inst.s)
        out.append(Fraction(a, b))
    return out
