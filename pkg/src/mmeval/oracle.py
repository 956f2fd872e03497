"""Approximation oracles for reals in ``(-1, 1)``.

An oracle answers ``query(k)`` with an integer ``b`` in ``[-2^k, 2^k]`` such
that ``|alpha - b / 2^k| < 2^-k``, and reports the sign of ``alpha``.
Answers are deterministic per ``k``. Each oracle remembers its most recent
answer under a lock, so one instance can be shared between threads.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidArgumentError
from .numerics import round_shift

__all__ = [
    "ApproximationOracle",
    "RationalOracle",
    "PowerOracle",
    "ComplexOracle",
    "make_rational_oracle",
    "make_complex_oracle",
    "power_oracle",
]


class ApproximationOracle:
    """Base class. Subclasses implement :meth:`_compute` and :meth:`sign`."""

    def __init__(self):
        self._lock = threading.Lock()
        self._last = None

    def query(self, k: int) -> int:
        if k < 0:
            raise InvalidArgumentError(f"precision must be nonnegative, got {k}")
        with self._lock:
            last = self._last
        if last is not None and last[0] == k:
            return last[1]
        b = self._compute(k)
        with self._lock:
            self._last = (k, b)
        return b

    def approximation(self, k: int) -> Fraction:
        """``query(k) / 2^k`` as an exact fraction."""
        return Fraction(self.query(k), 1 << k)

    def _compute(self, k: int) -> int:
        raise NotImplementedError

    def sign(self) -> int:
        raise NotImplementedError


class RationalOracle(ApproximationOracle):
    """Oracle backed by an exact rational; answers are nearest-integer roundings.

    Values of magnitude exactly 1 are accepted (their answers ``+-2^k`` are
    exact) so that unit coefficients such as in ``f = x1*x2`` need no special
    casing. :func:`make_rational_oracle` keeps the strict open interval.
    """

    def __init__(self, value):
        super().__init__()
        value = Fraction(value)
        if abs(value) > 1:
            raise InvalidArgumentError(f"oracle values must lie in [-1, 1], got {value}")
        self.value = value

    def _compute(self, k):
        num, den = self.value.numerator, self.value.denominator
        return -((den - (num << (k + 1))) // (2 * den))

    def sign(self):
        return (self.value > 0) - (self.value < 0)

    def __repr__(self):
        return f"RationalOracle({self.value})"


def make_rational_oracle(x) -> RationalOracle:
    """Oracle for a rational strictly inside ``(-1, 1)``."""
    x = Fraction(x)
    if abs(x) >= 1:
        raise InvalidArgumentError(f"oracle values must lie in (-1, 1), got {x}")
    return RationalOracle(x)


ZERO = RationalOracle(0)


class PowerOracle(ApproximationOracle):
    """Oracle for ``alpha**D`` built from an oracle for ``alpha`` by repeated squaring.

    Asking for ``k`` bits recurses on ``D // 2`` with ``k + 3`` bits (even
    ``D``) or ``k + 4`` bits (odd ``D``, which also needs ``alpha`` itself to
    ``k + 4`` bits), then rounds the square or the square times ``alpha`` back
    down to ``k`` bits.
    """

    def __init__(self, base: ApproximationOracle, exponent: int):
        super().__init__()
        if exponent < 1:
            raise InvalidArgumentError(f"exponent must be >= 1, got {exponent}")
        self.base = base
        self.exponent = exponent

    def _compute(self, k):
        return self._power(self.exponent, k)

    def _power(self, D, k):
        if D == 1:
            return self.base.query(k)
        if D % 2 == 0:
            t = k + 3
            a = self._power(D // 2, t)
            return round_shift(a * a, 2 * t - k)
        t = k + 4
        b = self.base.query(t)
        a = self._power((D - 1) // 2, t)
        return round_shift(a * a * b, 3 * t - k)

    def precision_schedule(self, k: int) -> list[tuple[int, int]]:
        """``(exponent, precision)`` for each level the recursion visits at ``k`` bits."""
        out, D = [], self.exponent
        while True:
            out.append((D, k))
            if D == 1:
                return out
            k, D = (k + 3, D // 2) if D % 2 == 0 else (k + 4, (D - 1) // 2)

    def sign(self):
        s = self.base.sign()
        return s if self.exponent % 2 else s * s

    def __repr__(self):
        return f"PowerOracle({self.base!r}, {self.exponent})"


def power_oracle(A: ApproximationOracle, D: int) -> ApproximationOracle:
    """Oracle for ``alpha**D``; ``D == 1`` returns ``A`` itself."""
    if D < 1:
        raise InvalidArgumentError(f"exponent must be >= 1, got {D}")
    if D == 1:
        return A
    return PowerOracle(A, D)


class ComplexOracle(NamedTuple):
    """A complex number as a pair of real oracles."""

    real: ApproximationOracle
    imag: ApproximationOracle


def make_complex_oracle(re, im) -> ComplexOracle:
    """Pair of rational oracles; each part may lie anywhere in ``[-1, 1]``."""
    return ComplexOracle(RationalOracle(re), RationalOracle(im))
