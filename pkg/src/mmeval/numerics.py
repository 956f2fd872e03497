"""Exact value domains: integers, rationals and dyadic fixed-point numbers.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(always reduced, positive denominator). :class:`Dyadic` is kept as its own type
because the approximate pipeline relies on every denominator being a power of
two that is shared across an instance.

Rounding follows one convention everywhere: the nearest integer, with exact
halves ``a + 1/2`` rounded *down* to ``a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InvalidArgumentError, ParseError

__all__ = [
    "Dyadic",
    "round_nearest",
    "round_shift",
    "dyadic_rescale",
    "ceil_log2",
    "parse_int",
    "parse_rational",
    "parse_dyadic",
    "format_rational",
]


def round_nearest(x) -> int:
    """Nearest integer to ``x``; ties ``a + 1/2`` go to ``a``.

    Parameters
    ----------
    x : int or Fraction
        Any exact rational value.

    Returns
    -------
    int
        The unique ``n`` with ``-1/2 < x - n <= 1/2``.
    """
    if isinstance(x, int):
        return x
    if not isinstance(x, Rational):
        raise InvalidArgumentError(f"round_nearest needs an exact rational, got {type(x).__name__}")
    num, den = x.numerator, x.denominator
    # ceil(x - 1/2) == -floor((den - 2*num) / (2*den))
    return -((den - 2 * num) // (2 * den))


def round_shift(n: int, e: int) -> int:
    """``round_nearest(n / 2**e)`` using only integer shifts."""
    if e <= 0:
        return n << -e
    return -(((1 << e) - 2 * n) >> (e + 1))


def ceil_log2(n: int) -> int:
    """Smallest integer ``c`` with ``2**c >= n`` for ``n >= 1``."""
    if n < 1:
        raise InvalidArgumentError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


@dataclass(frozen=True)
class Dyadic:
    """The number ``mantissa / 2**exponent``."""

    mantissa: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidArgumentError("Dyadic exponent must be nonnegative")

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __str__(self):
        return f"{self.mantissa}/2^{self.exponent}"


def dyadic_rescale(x: Dyadic, k: int) -> Dyadic:
    """Re-express ``x`` with exponent ``k``, rounding half-down when coarsening."""
    if k < 0:
        raise InvalidArgumentError("target exponent must be nonnegative")
    return Dyadic(round_shift(x.mantissa, x.exponent - k), k)


_INT_RE = re.compile(r"[+-]?\d+\Z")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")
_DYADIC_RE = re.compile(r"([+-]?\d+)/2\^(\d+)\Z")


def parse_int(text: str) -> int:
    text = text.strip()
    if not _INT_RE.match(text):
        raise ParseError(f"expected an integer, got {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer into a reduced :class:`Fraction`.

    Dyadic ``"a/2^k"`` literals are accepted as well since they denote
    rationals.
    """
    text = text.strip()
    dm = _DYADIC_RE.match(text)
    if dm:
        return parse_dyadic(text).to_fraction()
    m = _RAT_RE.match(text)
    if not m:
        raise ParseError(f"expected a rational 'p/q', got {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def parse_dyadic(text: str) -> Dyadic:
    m = _DYADIC_RE.match(text.strip())
    if not m:
        raise ParseError(f"expected a dyadic 'a/2^k', got {text!r}")
    return Dyadic(int(m.group(1)), int(m.group(2)))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
