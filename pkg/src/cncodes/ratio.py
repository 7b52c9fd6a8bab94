"""Exact rationals for r, discrepancy values and bound arithmetic.

``Fraction`` already keeps lowest terms with a positive denominator, so it is
used directly; this module only adds parsing, rendering and the two floor
conventions the bounds need.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from .errors import ParameterError, ParseError

Ratio = Fraction

_RATIO_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_ratio(text: str) -> Fraction:
    """Parse ``"a/b"`` or a bare integer. Decimal and float notation is rejected."""
    match = _RATIO_RE.match(text)
    if match is None:
        raise ParseError(f"not an exact rational (expected a/b or integer): {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def as_ratio(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings. Floats are refused."""
    if isinstance(value, bool):
        raise ParameterError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_ratio(value)
    raise ParameterError(f"expected an exact rational, got {type(value).__name__} {value!r}")


def check_r(r) -> Fraction:
    r = as_ratio(r)
    if r < 1:
        raise ParameterError(f"r must satisfy r >= 1, got {format_ratio(r)}")
    return r


def format_ratio(x: Fraction | int) -> str:
    """Canonical ``num/den`` rendering, used in every JSON payload."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_plain(x: Fraction | int) -> str:
    """Human rendering: integers without a denominator."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ceil(x: Fraction | int) -> int:
    return math.ceil(Fraction(x))


def floor(x: Fraction | int) -> int:
    """Ordinary floor: the largest integer <= x."""
    return math.floor(Fraction(x))


def strict_floor(x: Fraction | int) -> int:
    """Largest integer strictly below x (differs from floor only at integers)."""
    x = Fraction(x)
    f = math.floor(x)
    return f - 1 if f == x else f
