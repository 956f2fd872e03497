"""Line-oriented text format for evaluation instances.

::

    # comments run to end of line
    mode rat            # int | approx | approx-complex | rat
    m 2
    d 2
    N 1
    s 8                 # int / rat: output bit bound
    t 10                # approx modes: accuracy in bits
    coefficients
    0 1/3 1/2 0         # d^m values, row-major, last variable fastest
    points
    1/2 2/5             # N lines of m values

Value syntax per mode: ``int`` takes integers. ``rat`` and ``approx`` take
``p/q``, dyadic ``a/2^k`` or integers. ``approx-complex`` takes ``re,im``
pairs of those, and a bare value means a zero imaginary part. Coefficient
values may span several lines; each point must sit on its own line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .approx import ApproxInstance
from .errors import InvalidArgumentError, ParseError
from .intmme import IntMmeInstance, naive_output_bound
from .kronecker import DensePolynomial
from .numerics import parse_int, parse_rational
from .oracle import RationalOracle, make_complex_oracle
from .ratmme import RatMmeInstance

__all__ = ["InstanceFile", "MODES", "parse_instance", "serialize_instance", "format_results"]

MODES = ("int", "approx", "approx-complex", "rat")
_HEADER_KEYS = ("mode", "m", "d", "N", "s", "t")


@dataclass
class InstanceFile:
    """Parsed contents of an instance file.

    Values are already typed: ints for ``int`` mode, Fractions for ``rat``
    and ``approx``, and pairs of Fractions for ``approx-complex``.
    """

    mode: str
    m: int
    d: int
    coeffs: list
    points: list
    s: int | None = None
    t: int | None = None

    @property
    def N(self) -> int:
        return len(self.points)

    def polynomial(self) -> DensePolynomial:
        return DensePolynomial(self.m, self.d, self.coeffs)

    def to_instance(self):
        """Typed pipeline input for this file's mode.

        ``approx-complex`` has no instance class and yields
        ``(f, points, t)`` with oracle entries.
        """
        f = self.polynomial()
        if self.mode == "int":
            s = self.s
            if s is None:
                widest = max([abs(v) for v in self.coeffs] + [abs(x) for a in self.points for x in a] + [1])
                s = naive_output_bound(self.d, self.m, widest.bit_length() + 1)
            return IntMmeInstance(f, self.points, s)
        if self.mode == "rat":
            if self.s is None:
                raise InvalidArgumentError("rat mode needs an output bit bound s")
            return RatMmeInstance(f, self.points, self.s)
        if self.t is None:
            raise InvalidArgumentError(f"{self.mode} mode needs an accuracy t")
        if self.mode == "approx":
            fo = f.map_coeffs(RationalOracle)
            return ApproxInstance(fo, [tuple(RationalOracle(x) for x in a) for a in self.points], self.t)
        fo = f.map_coeffs(lambda c: make_complex_oracle(*c))
        return fo, [tuple(make_complex_oracle(*x) for x in a) for a in self.points], self.t


def _value_parser(mode):
    if mode == "int":
        return parse_int
    if mode in ("rat", "approx"):
        return parse_rational

    def pair(text):
        parts = text.split(",")
        if len(parts) == 1:
            return (parse_rational(parts[0]), Fraction(0))
        if len(parts) != 2:
            raise ParseError(f"expected a complex value 're,im', got {text!r}")
        return (parse_rational(parts[0]), parse_rational(parts[1]))

    return pair


def _tokens(line):
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield tok, col + 1
        col += len(tok)


def parse_instance(text: str, mode: str | None = None) -> InstanceFile:
    """Parse an instance file.

    ``mode`` supplies the mode when the header omits it; if both are given
    they must agree.

    Raises
    ------
    ParseError
        With line and column of the first problem, including count mismatches.
    """
    header = {}
    section = None
    coeff_tokens, point_lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        word = line.strip()
        if word in ("coefficients", "points"):
            if word == "points" and section != "coefficients":
                raise ParseError("'points' section must follow 'coefficients'", lineno)
            section = word
            continue
        if section is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in _HEADER_KEYS:
                raise ParseError(f"expected 'key value' header with key in {_HEADER_KEYS}, got {word!r}", lineno)
            if parts[0] in header:
                raise ParseError(f"duplicate header key {parts[0]!r}", lineno)
            header[parts[0]] = (parts[1], lineno, line.index(parts[1]) + 1)
        elif section == "coefficients":
            coeff_tokens.extend((tok, lineno, col) for tok, col in _tokens(line))
        else:
            point_lines.append((lineno, list(_tokens(line))))

    file_mode = header.get("mode", (None,))[0]
    if file_mode is not None and mode is not None and file_mode != mode:
        raise ParseError(f"file mode {file_mode!r} does not match requested mode {mode!r}", header["mode"][1])
    mode = file_mode or mode
    if mode not in MODES:
        raise ParseError(f"mode must be one of {MODES}, got {mode!r}")

    def header_int(key, required=True):
        if key not in header:
            if required:
                raise ParseError(f"missing header key {key!r}")
            return None
        val, lineno, col = header[key]
        try:
            return parse_int(val)
        except ParseError as exc:
            raise ParseError(str(exc), lineno, col) from None

    m, d = header_int("m"), header_int("d")
    n_points = header_int("N", required=False)
    s, t = header_int("s", required=False), header_int("t", required=False)
    # a point with no coordinates would be an empty line, which is skipped
    if m < 1 or d < 1:
        raise ParseError(f"need m >= 1 and d >= 1, got m={m}, d={d}")
    if section is None:
        raise ParseError("missing 'coefficients' section")

    parse_value = _value_parser(mode)
    expected = d**m
    if len(coeff_tokens) != expected:
        where = coeff_tokens[-1][1] if coeff_tokens else None
        raise ParseError(f"expected d^m = {expected} coefficients, found {len(coeff_tokens)}", where)
    coeffs = []
    for tok, lineno, col in coeff_tokens:
        try:
            coeffs.append(parse_value(tok))
        except ParseError as exc:
            raise ParseError(str(exc), lineno, col) from None

    points = []
    for lineno, toks in point_lines:
        if len(toks) != m:
            raise ParseError(f"expected {m} coordinates per point, found {len(toks)}", lineno)
        row = []
        for tok, col in toks:
            try:
                row.append(parse_value(tok))
            except ParseError as exc:
                raise ParseError(str(exc), lineno, col) from None
        points.append(tuple(row))
    if n_points is not None and n_points != len(points):
        raise ParseError(f"header declares N = {n_points} points, found {len(points)}")
    return InstanceFile(mode, m, d, coeffs, points, s, t)


def _format_value(v):
    if isinstance(v, tuple):
        return ",".join(_format_value(x) for x in v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def serialize_instance(inst: InstanceFile) -> str:
    """Canonical text for ``inst``; ``parse_instance`` reads it back unchanged."""
    lines = [f"mode {inst.mode}", f"m {inst.m}", f"d {inst.d}", f"N {inst.N}"]
    if inst.s is not None:
        lines.append(f"s {inst.s}")
    if inst.t is not None:
        lines.append(f"t {inst.t}")
    lines.append("coefficients")
    row = inst.d if inst.m else 1
    for i in range(0, len(inst.coeffs), row):
        lines.append(" ".join(_format_value(c) for c in inst.coeffs[i : i + row]))
    lines.append("points")
    for a in inst.points:
        lines.append(" ".join(_format_value(x) for x in a))
    return "\n".join(lines) + "\n"


def format_results(mode: str, results, t: int | None = None) -> list[str]:
    """One output line per evaluation in the mode's result syntax."""
    if mode == "int":
        return [str(v) for v in results]
    if mode == "rat":
        return [f"{v.numerator}/{v.denominator}" for v in results]
    if mode == "approx":
        return [f"{b}/2^{t}" for b in results]
    return [f"{b}/2^{t},{c}/2^{t}" for b, c in results]
