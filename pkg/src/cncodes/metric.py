"""Binary words, codes and the asymmetric discrepancy.

Words are packed 64 bits per limb, bit ``i`` of the word living in limb
``i // 64`` at position ``i % 64``. With that layout

    d10(y, x) = popcount(y & ~x)        d01(y, x) = popcount(~y & x)

and the discrepancy is the linear form ``r * d10 + d01``.

The minimum discrepancy of a code is taken over ordered pairs of distinct
codewords. Rather than re-enumerating pairs for every r, :func:`profile`
collects the Pareto-minimal (d10, d01) points once; since every r >= 1 gives a
linear form with positive coefficients, its minimum over all pairs is attained
on that envelope.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import DegenerateCodeError, DimensionError, DuplicateWordError, PairBudgetError
from .ratio import check_r

MAX_LENGTH = 1 << 20
DEFAULT_PAIR_BUDGET = 10**9


def _n_limbs(n: int) -> int:
    return (n + 63) // 64


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a (K, n) array of 0/1 values into (K, ceil(n/64)) uint64 limbs."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim == 1:
        return pack_bits(bits[None, :])[0]
    K, n = bits.shape
    L = _n_limbs(n)
    padded = np.zeros((K, L * 64), dtype=np.uint8)
    padded[:, :n] = bits
    return np.packbits(padded, axis=1, bitorder="little").view("<u8").astype(np.uint64)


def unpack_bits(packed: np.ndarray, n: int) -> np.ndarray:
    packed = np.asarray(packed, dtype=np.uint64)
    if packed.ndim == 1:
        return unpack_bits(packed[None, :], n)[0]
    raw = np.ascontiguousarray(packed.astype("<u8")).view(np.uint8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :n]


def _check_length(n: int) -> None:
    if not 1 <= n <= MAX_LENGTH:
        raise DimensionError(f"word length must be in [1, {MAX_LENGTH}], got {n}")


@dataclass(frozen=True, eq=False)
class Word:
    """An element of F_2^n stored as packed uint64 limbs."""

    n: int
    limbs: np.ndarray

    def __post_init__(self):
        _check_length(self.n)
        limbs = np.array(self.limbs, dtype=np.uint64).reshape(-1)
        if limbs.shape[0] != _n_limbs(self.n):
            raise DimensionError(f"{limbs.shape[0]} limbs cannot hold a length-{self.n} word")
        tail = self.n % 64
        if tail and int(limbs[-1]) >> tail:
            raise DimensionError("bits set beyond the word length")
        limbs.setflags(write=False)
        object.__setattr__(self, "limbs", limbs)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> Word:
        arr = np.fromiter((int(b) for b in bits), dtype=np.int64)
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise DimensionError("word entries must be 0 or 1")
        return cls(arr.size, pack_bits(arr.astype(np.uint8)))

    @classmethod
    def from_string(cls, text: str) -> Word:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise DimensionError(f"not a binary string: {text!r}")
        return cls.from_bits(int(c) for c in text)

    def bits(self) -> np.ndarray:
        return unpack_bits(self.limbs, self.n)

    def weight(self) -> int:
        return int(np.bitwise_count(self.limbs).sum())

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not -self.n <= i < self.n:
            raise IndexError(i)
        i %= self.n
        return int(self.limbs[i // 64] >> np.uint64(i % 64)) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.limbs, other.limbs)

    def __hash__(self) -> int:
        return hash((self.n, self.limbs.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.bits()))

    def __repr__(self) -> str:
        return f"Word('{self}')" if self.n <= 64 else f"Word(n={self.n})"


class DiscrepancyPair(NamedTuple):
    d10: int
    d01: int

    def evaluate(self, r) -> Fraction:
        return check_r(r) * self.d10 + self.d01

    @property
    def hamming(self) -> int:
        return self.d10 + self.d01


def _pair_counts(y: Word, x: Word) -> DiscrepancyPair:
    if y.n != x.n:
        raise DimensionError(f"length mismatch: {y.n} vs {x.n}")
    d10 = int(np.bitwise_count(y.limbs & ~x.limbs).sum())
    d01 = int(np.bitwise_count(~y.limbs & x.limbs).sum())
    return DiscrepancyPair(d10, d01)


def discrepancy_pair(y: Word, x: Word) -> DiscrepancyPair:
    """Counts of positions where (y_i, x_i) is (1, 0) and (0, 1)."""
    return _pair_counts(y, x)


def delta_r(y: Word, x: Word, r) -> Fraction:
    """r * d10(y, x) + d01(y, x), exactly."""
    r = check_r(r)
    return _pair_counts(y, x).evaluate(r)


def hamming_distance(y: Word, x: Word) -> int:
    return _pair_counts(y, x).hamming


class Code:
    """An ordered set of distinct binary words of common length n.

    Instances are treated as immutable; the packed matrix is read-only and the
    discrepancy profile is computed once and cached.
    """

    def __init__(self, words: Iterable[Word | str | Sequence[int]]):
        rows = []
        n = None
        for w in words:
            if isinstance(w, str):
                w = Word.from_string(w)
            elif not isinstance(w, Word):
                w = Word.from_bits(w)
            if n is None:
                n = w.n
            elif w.n != n:
                raise DimensionError(f"word {len(rows)} has length {w.n}, expected {n}")
            rows.append(w.limbs)
        if n is None:
            raise DegenerateCodeError("a code needs at least one word")
        self._init_packed(np.stack(rows), n)

    @classmethod
    def from_bits(cls, bits: np.ndarray) -> Code:
        bits = np.asarray(bits)
        if bits.ndim != 2 or bits.shape[0] == 0:
            raise DegenerateCodeError("expected a non-empty (K, n) bit matrix")
        if not np.isin(bits, (0, 1)).all():
            raise DimensionError("bit matrix entries must be 0 or 1")
        _check_length(bits.shape[1])
        obj = cls.__new__(cls)
        obj._init_packed(pack_bits(bits), bits.shape[1])
        return obj

    @classmethod
    def from_packed(cls, packed: np.ndarray, n: int) -> Code:
        obj = cls.__new__(cls)
        obj._init_packed(np.asarray(packed, dtype=np.uint64), n)
        return obj

    def _init_packed(self, packed: np.ndarray, n: int) -> None:
        _check_length(n)
        packed = np.ascontiguousarray(packed, dtype=np.uint64)
        if packed.ndim != 2 or packed.shape[1] != _n_limbs(n):
            raise DimensionError("packed matrix has the wrong shape")
        seen: dict[bytes, int] = {}
        for i, row in enumerate(packed):
            key = row.tobytes()
            if key in seen:
                raise DuplicateWordError(f"words {seen[key]} and {i} are equal")
            seen[key] = i
        packed.setflags(write=False)
        self.n = n
        self.packed = packed
        self._profile: DiscrepancyProfile | None = None

    @property
    def K(self) -> int:
        return self.packed.shape[0]

    def __len__(self) -> int:
        return self.K

    def __getitem__(self, i: int) -> Word:
        return Word(self.n, self.packed[i])

    def __iter__(self):
        for i in range(self.K):
            yield self[i]

    def bits(self) -> np.ndarray:
        return unpack_bits(self.packed, self.n)

    def strings(self) -> list[str]:
        return ["".join(map(str, row)) for row in self.bits()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.packed, other.packed)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Code(n={self.n}, K={self.K})"

    def is_xor_closed(self) -> bool:
        """True when the set of words is closed under componentwise XOR.

        Only closure is tested, so a code without the zero word is never closed.
        """
        rows = {row.tobytes() for row in self.packed}
        for i in range(self.K):
            sums = self.packed[i] ^ self.packed
            for row in sums:
                if row.tobytes() not in rows:
                    return False
        return True


def require_pairs(code: Code) -> None:
    if code.K < 2:
        raise DegenerateCodeError(f"need K >= 2 codewords, got K = {code.K}")


@dataclass(frozen=True)
class DiscrepancyProfile:
    """Pareto-minimal (d10, d01) points over all ordered codeword pairs.

    ``points`` is sorted by increasing d10 (hence strictly decreasing d01);
    ``witnesses[t]`` is the lexicographically smallest ordered index pair
    (i, j) with discrepancy_pair(code[i], code[j]) == points[t].
    """

    n: int
    K: int
    points: tuple[DiscrepancyPair, ...]
    witnesses: tuple[tuple[int, int], ...]

    def evaluate(self, r) -> tuple[Fraction, tuple[int, int]]:
        """Minimum discrepancy at r with its lexicographically smallest witness."""
        r = check_r(r)
        best = None
        for point, wit in zip(self.points, self.witnesses):
            value = point.evaluate(r)
            if best is None or (value, wit) < best:
                best = (value, wit)
        return best

    def min_hamming(self) -> int:
        return min(p.hamming for p in self.points)


def _decode_envelope(best: np.ndarray, K: int) -> tuple[list, list]:
    KK = K * K
    points, witnesses = [], []
    lowest = None
    for a, key in enumerate(best.tolist()):
        if key == kernels.EMPTY:
            continue
        b, code = divmod(key, KK)
        if lowest is not None and b >= lowest:
            continue
        lowest = b
        points.append(DiscrepancyPair(a, b))
        witnesses.append(divmod(code, K))
    return points, witnesses


def profile(code: Code, pair_budget: int | None = None) -> DiscrepancyProfile:
    """Enumerate all K(K-1) ordered pairs and keep the Pareto-minimal counts."""
    require_pairs(code)
    budget = DEFAULT_PAIR_BUDGET if pair_budget is None else pair_budget
    n_pairs = code.K * (code.K - 1)
    if n_pairs > budget:
        raise PairBudgetError(f"{n_pairs} ordered pairs exceed the budget of {budget}")
    if code._profile is not None:
        return code._profile
    best = kernels.pair_envelope(code.packed, code.n)
    points, witnesses = _decode_envelope(best, code.K)
    prof = DiscrepancyProfile(code.n, code.K, tuple(points), tuple(map(tuple, witnesses)))
    code._profile = prof
    return prof


def min_discrepancy(code: Code, r, pair_budget: int | None = None) -> tuple[Fraction, tuple[int, int]]:
    """delta_r(C) and the lexicographically smallest ordered pair (i, j) attaining it."""
    r = check_r(r)
    return profile(code, pair_budget).evaluate(r)


def min_hamming(code: Code, pair_budget: int | None = None) -> int:
    return profile(code, pair_budget).min_hamming()
