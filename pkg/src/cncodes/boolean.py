"""Boolean functions on F_2^m and codes built from their evaluations.

Points of F_2^m are integers in [0, 2^m): coordinate x_i is bit i - 1, so x_1
is the least significant bit. Truth tables, supports and codeword coordinates
all use that index.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .errors import CollisionError, DegenerateCodeError, DimensionError, ParameterError, ParseError
from .metric import Code
from .ratio import check_r

MAX_VARS = 24


def _check_m(m: int) -> None:
    if not 1 <= m <= MAX_VARS:
        raise ParameterError(f"number of variables must be in [1, {MAX_VARS}], got {m}")


def point_index(point, m: int) -> int:
    """Accept an integer index or a bit sequence (x_1, ..., x_m)."""
    if isinstance(point, (int, np.integer)):
        idx = int(point)
    else:
        bits = list(point)
        if len(bits) != m or any(b not in (0, 1) for b in bits):
            raise DimensionError(f"expected {m} binary coordinates, got {bits}")
        idx = sum(b << i for i, b in enumerate(bits))
    if not 0 <= idx < 1 << m:
        raise DimensionError(f"point {idx} is outside F_2^{m}")
    return idx


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    m: int
    table: np.ndarray

    def __post_init__(self):
        _check_m(self.m)
        table = np.array(self.table, dtype=np.uint8).reshape(-1)
        if table.shape[0] != 1 << self.m:
            raise DimensionError(f"truth table of {table.shape[0]} entries does not match m={self.m}")
        if (table > 1).any():
            raise DimensionError("truth table entries must be 0 or 1")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def constant(cls, m: int, value: int = 0) -> BooleanFunction:
        return cls(m, np.full(1 << m, value, dtype=np.uint8))

    @classmethod
    def variable(cls, m: int, i: int) -> BooleanFunction:
        """The coordinate function x_i (1-based)."""
        if not 1 <= i <= m:
            raise ParameterError(f"variable x{i} out of range for m={m}")
        idx = np.arange(1 << m)
        return cls(m, (idx >> (i - 1)) & 1)

    @classmethod
    def linear(cls, m: int, a: int, b: int = 0) -> BooleanFunction:
        """x -> a . x + b."""
        idx = np.arange(1 << m, dtype=np.int64)
        return cls(m, (np.bitwise_count(idx & a) + b) & 1)

    def __add__(self, other: BooleanFunction | int) -> BooleanFunction:
        if isinstance(other, (int, np.integer)):
            return BooleanFunction(self.m, self.table ^ (int(other) & 1))
        if other.m != self.m:
            raise DimensionError("functions have different numbers of variables")
        return BooleanFunction(self.m, self.table ^ other.table)

    __radd__ = __add__

    def shift(self, a: int) -> BooleanFunction:
        """x -> f(x + a)."""
        idx = np.arange(1 << self.m) ^ point_index(a, self.m)
        return BooleanFunction(self.m, self.table[idx])

    def __call__(self, point) -> int:
        return int(self.table[point_index(point, self.m)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.m, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"BooleanFunction(m={self.m}, tt={format_truth_table_hex(self)!r})"

    @cached_property
    def signs(self) -> np.ndarray:
        """(-1)^f(x) as int64."""
        return 1 - 2 * self.table.astype(np.int64)

    def weight(self) -> int:
        return int(self.table.sum())


# -- textual input ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(x(\d+))|([01])|([+*]))")


def parse_anf(text: str, m: int) -> BooleanFunction:
    """Parse a sum of products over F_2, e.g. ``"x1*x2 + x3*x4 + 1"``.

    Grammar: ``expr := term ('+' term)*``, ``term := factor ('*' factor)*``,
    ``factor := x<i> | 0 | 1``. Whitespace is ignored.
    """
    _check_m(m)
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = match.start(match.lastindex)
        if match.group(1):
            i = int(match.group(2))
            if not 1 <= i <= m:
                raise ParseError(f"variable x{i} out of range for m={m}", start)
            tokens.append(("var", i, start))
        elif match.group(3):
            tokens.append(("const", int(match.group(3)), start))
        else:
            tokens.append(("op", match.group(4), start))
        pos = match.end()
    if not tokens:
        raise ParseError("empty expression", 0)

    idx = np.arange(1 << m)
    result = np.zeros(1 << m, dtype=np.uint8)
    term = np.ones(1 << m, dtype=np.uint8)
    expect_factor = True
    for kind, value, start in tokens:
        if expect_factor:
            if kind == "var":
                term &= ((idx >> (value - 1)) & 1).astype(np.uint8)
            elif kind == "const":
                term &= np.uint8(value)
            else:
                raise ParseError(f"expected a variable or constant, found {value!r}", start)
            expect_factor = False
        else:
            if kind != "op":
                raise ParseError("expected '+' or '*'", start)
            if value == "+":
                result ^= term
                term = np.ones(1 << m, dtype=np.uint8)
            expect_factor = True
    if expect_factor:
        raise ParseError("expression ends with an operator", len(text))
    result ^= term
    return BooleanFunction(m, result)


_HEX_RE = re.compile(r"^\s*m\s*=\s*(\d+)\s*;\s*tt\s*=\s*(?:0x)?([0-9a-fA-F]+)\s*$")


def parse_truth_table_hex(text: str) -> BooleanFunction:
    """Parse ``m=<int>;tt=<hex>``: the hex integer has bit x equal to f(x)."""
    match = _HEX_RE.match(text)
    if match is None:
        raise ParseError(f"expected 'm=<int>;tt=<hex>', got {text!r}")
    m = int(match.group(1))
    _check_m(m)
    value = int(match.group(2), 16)
    if value >> (1 << m):
        raise ParseError(f"truth table has more than 2^{m} bits")
    bits = np.array([(value >> x) & 1 for x in range(1 << m)], dtype=np.uint8) if m <= 16 else _bits_of_big(value, m)
    return BooleanFunction(m, bits)


def _bits_of_big(value: int, m: int) -> np.ndarray:
    raw = value.to_bytes((1 << m) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")


def format_truth_table_hex(f: BooleanFunction) -> str:
    digits = max(1, (1 << f.m) // 4)
    if f.m >= 3:
        value = int.from_bytes(np.packbits(f.table, bitorder="little").tobytes(), "little")
    else:
        value = sum(int(b) << x for x, b in enumerate(f.table))
    return f"m={f.m};tt={value:0{digits}x}"


def inner_product_function(m: int, complement: bool = False) -> BooleanFunction:
    """x1*x2 + x3*x4 + ... (+ 1): the default bent function for even m."""
    if m % 2 or m < 2:
        raise ParameterError(f"inner-product bent function needs even m >= 2, got {m}")
    terms = [f"x{2 * i + 1}*x{2 * i + 2}" for i in range(m // 2)]
    if complement:
        terms.append("1")
    return parse_anf("+".join(terms), m)


# -- spectra ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    m: int
    values: np.ndarray

    def parseval_holds(self) -> bool:
        total = sum(int(v) * int(v) for v in self.values.tolist())
        return total == 1 << (2 * self.m)

    def __getitem__(self, y: int) -> int:
        return int(self.values[y])


def walsh(f: BooleanFunction) -> WalshSpectrum:
    """W_f(y) = sum over x of (-1)^(f(x) + x.y), by the fast butterfly."""
    values = kernels.fwht(f.signs)
    values.setflags(write=False)
    return WalshSpectrum(f.m, values)


def is_bent(f: BooleanFunction) -> tuple[bool, int | None]:
    """Bentness and, for bent f, the sign eps with W_f(0) = -eps * 2^(m/2)."""
    if f.m % 2:
        return False, None
    spectrum = walsh(f).values
    level = 1 << (f.m // 2)
    if not (np.abs(spectrum) == level).all():
        return False, None
    return True, -int(spectrum[0]) // level


def autocorrelation(f: BooleanFunction, a) -> int:
    """sum over x of (-1)^(f(x + a) + f(x))."""
    a = point_index(a, f.m)
    idx = np.arange(1 << f.m) ^ a
    return int((f.signs[idx] * f.signs).sum())


@dataclass(frozen=True)
class EvaluationSet:
    """Ordered distinct points of F_2^m at which functions are evaluated."""

    m: int
    points: tuple[int, ...]

    def __post_init__(self):
        _check_m(self.m)
        pts = tuple(point_index(p, self.m) for p in self.points)
        if len(set(pts)) != len(pts):
            raise DimensionError("evaluation points must be distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def full(cls, m: int) -> EvaluationSet:
        return cls(m, tuple(range(1 << m)))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def index(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.int64)


def support(f: BooleanFunction) -> EvaluationSet:
    """D_f = {x : f(x) = 1} in increasing index order."""
    return EvaluationSet(f.m, tuple(np.flatnonzero(f.table).tolist()))


# -- codes from functions ---------------------------------------------------

def _restrict(V: EvaluationSet, S: Sequence[BooleanFunction]) -> np.ndarray:
    if len(S) < 2:
        raise DegenerateCodeError("need at least two functions")
    if V.n < 2:
        raise DegenerateCodeError(f"evaluation set needs at least 2 points, has {V.n}")
    for f in S:
        if f.m != V.m:
            raise DimensionError(f"function on {f.m} variables, evaluation set in F_2^{V.m}")
    return np.stack([f.table for f in S])[:, V.index]


def code_from_functions(V: EvaluationSet, S: Sequence[BooleanFunction]) -> Code:
    """Codewords (f(x))_{x in V} in the order of S; fails if two functions coincide on V."""
    rows = _restrict(V, S)
    seen: dict[bytes, int] = {}
    for j, row in enumerate(rows):
        key = row.tobytes()
        if key in seen:
            raise CollisionError(seen[key], j)
        seen[key] = j
    return Code.from_bits(rows)


def _sign_sum(f: BooleanFunction, V: EvaluationSet) -> int:
    return int(f.signs[V.index].sum())


def delta_via_sums(f: BooleanFunction, g: BooleanFunction, V: EvaluationSet, r) -> Fraction:
    """Discrepancy of (c_f, c_g) through character sums over V.

    (r+1)/4 (n - sum (-1)^(f+g)) + (r-1)/4 (sum (-1)^g - sum (-1)^f)
    """
    r = check_r(r)
    rows = _restrict(V, [f, g])
    if np.array_equal(rows[0], rows[1]):
        raise CollisionError(0, 1)
    cross = int((f.signs[V.index] * g.signs[V.index]).sum())
    s_f, s_g = _sign_sum(f, V), _sign_sum(g, V)
    return (r + 1) / 4 * (V.n - cross) + (r - 1) / 4 * (s_g - s_f)


def restricted_min_discrepancy(V: EvaluationSet, S: Sequence[BooleanFunction], r) -> Fraction:
    """Minimum of the character-sum discrepancy over ordered pairs with
    sum (-1)^g <= sum (-1)^f. Equals the unrestricted minimum of the code."""
    r = check_r(r)
    code_from_functions(V, S)
    X = 1 - 2 * _restrict(V, S).astype(np.int64)
    n = V.n
    cross = X @ X.T
    s = X.sum(axis=1)
    p, q = r.numerator, r.denominator
    dtype = np.int64 if (p + q) * 4 * n < 1 << 60 else object
    diff = s[None, :] - s[:, None]  # [f, g] -> s_g - s_f
    scaled = (p + q) * (n - cross.astype(dtype)) + (p - q) * diff.astype(dtype)
    mask = diff <= 0
    np.fill_diagonal(mask, False)
    return Fraction(int(scaled[mask].min()), 4 * q)
