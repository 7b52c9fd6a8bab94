"""GF(2^d) in a polynomial basis, the trace map, and the Kerdock bent set.

Elements are integers in [0, 2^d); bit i is the coefficient of x^i. The
modulus is stored as a bit mask including the x^d term (x^3 + x + 1 is 0b1011).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .boolean import BooleanFunction
from .errors import ParameterError, ReducibleModulusError

MIN_DEGREE, MAX_DEGREE = 2, 16


def _degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    """Remainder of a divided by b in F_2[x]."""
    db = _degree(b)
    while a and _degree(a) >= db:
        a ^= b << (_degree(a) - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg/2."""
    d = _degree(poly)
    if d < 1:
        return False
    for divisor in range(2, 1 << (d // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def smallest_irreducible(d: int) -> int:
    for poly in range(1 << d, 1 << (d + 1)):
        if is_irreducible(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldCtx:
    d: int
    modulus: int

    def __post_init__(self):
        if not MIN_DEGREE <= self.d <= MAX_DEGREE:
            raise ParameterError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {self.d}")
        if _degree(self.modulus) != self.d:
            raise ParameterError(f"modulus {self.modulus:#x} does not have degree {self.d}")
        if not is_irreducible(self.modulus):
            raise ReducibleModulusError(f"modulus {self.modulus:#x} is reducible over GF(2)")

    @property
    def order(self) -> int:
        return 1 << self.d

    @property
    def modulus_hex(self) -> str:
        return f"{self.modulus:#x}"

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ParameterError(f"{a} is not an element of GF(2^{self.d})")
        return a

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def mul(self, a: int, b: int) -> int:
        a, b = self._check(a), self._check(b)
        top, mod = 1 << self.d, self.modulus
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return out

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Tr(a) = a + a^2 + a^4 + ... + a^(2^(d-1)), which lies in {0, 1}."""
        return int(self.traces[self._check(a)])

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, self._check(value))

    # vectorised helpers over numpy int64 arrays

    def mul_vec(self, a: np.ndarray, b) -> np.ndarray:
        a = np.array(a, dtype=np.int64)
        b = np.broadcast_to(np.asarray(b, dtype=np.int64), a.shape).copy()
        out = np.zeros_like(a)
        top = 1 << self.d
        for _ in range(self.d):
            out ^= np.where(b & 1, a, 0)
            b >>= 1
            a <<= 1
            a = np.where(a & top, a ^ self.modulus, a)
        return out

    def pow_vec(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.array(a, dtype=np.int64)
        out = np.ones_like(a)
        while e:
            if e & 1:
                out = self.mul_vec(out, a)
            a = self.mul_vec(a, a)
            e >>= 1
        return out

    def trace_vec(self, a: np.ndarray) -> np.ndarray:
        a = np.array(a, dtype=np.int64)
        acc = np.zeros_like(a)
        for _ in range(self.d):
            acc ^= a
            a = self.mul_vec(a, a)
        return acc

    @cached_property
    def traces(self) -> np.ndarray:
        tr = self.trace_vec(np.arange(self.order))
        if not np.isin(tr, (0, 1)).all():
            raise AssertionError("trace left the prime field")
        tr.setflags(write=False)
        return tr


def field_new(d: int, modulus: int | None = None) -> FieldCtx:
    """GF(2^d); the default modulus is the numerically smallest irreducible."""
    if not MIN_DEGREE <= d <= MAX_DEGREE:
        raise ParameterError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {d}")
    return FieldCtx(d, smallest_irreducible(d) if modulus is None else modulus)


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ParameterError("field elements from different contexts")
            return other.value
        return self.ctx._check(int(other))

    def __add__(self, other) -> FieldElement:
        return FieldElement(self.ctx, self.value ^ self._other(other))

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, other) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def __int__(self) -> int:
        return self.value


# -- Kerdock bent set -------------------------------------------------------

def _check_kerdock_m(m: int) -> int:
    if m % 2 or m < 4:
        raise ParameterError(f"Kerdock functions need even m >= 4, got {m}")
    return m // 2


def kerdock_function(ctx: FieldCtx, u: int, m: int, *, literal_exponents: bool = False) -> BooleanFunction:
    """f_u(x, x_m) = Tr(sum_j (ux)^(2^j + 1)) + x_m Tr(ux) on GF(2^(m-1)) x F_2.

    The sum runs over j = 1 .. k-1 with k = m/2. In GF(2^(2k-1)) the exponent
    2^k + 1 is a Frobenius conjugate of 2^(k-1) + 1, so also including j = k
    (``literal_exponents=True``) cancels the last term and destroys bentness.

    The point (x, x_m) has truth-table index ``x + 2^(m-1) * x_m``.
    """
    k = _check_kerdock_m(m)
    if ctx.d != m - 1:
        raise ParameterError(f"Kerdock functions on m={m} variables need GF(2^{m - 1}), got GF(2^{ctx.d})")
    ctx._check(u)
    xs = np.arange(ctx.order, dtype=np.int64)
    ux = ctx.mul_vec(xs, u)
    last = k if literal_exponents else k - 1
    acc = np.zeros_like(ux)
    for j in range(1, last + 1):
        acc ^= ctx.pow_vec(ux, (1 << j) + 1)
    quad = ctx.traces[acc]
    lin = ctx.traces[ux]
    return BooleanFunction(m, np.concatenate([quad, quad ^ lin]))


def kerdock_set(m: int, ctx: FieldCtx | None = None, **kwargs) -> list[BooleanFunction]:
    """[f_u for u in GF(2^(m-1))] in integer order of u; f_0 is identically 0."""
    _check_kerdock_m(m)
    ctx = field_new(m - 1) if ctx is None else ctx
    return [kerdock_function(ctx, u, m, **kwargs) for u in range(ctx.order)]


def linear_function(ctx: FieldCtx, a: int, a_m: int, m: int) -> BooleanFunction:
    """l(x, x_m) = Tr(a x) + a_m x_m, with the same index convention."""
    ctx._check(a)
    tr = ctx.traces[ctx.mul_vec(np.arange(ctx.order), a)]
    return BooleanFunction(m, np.concatenate([tr, tr ^ (a_m & 1)]))
