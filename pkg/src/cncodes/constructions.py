"""Concrete codes: Sylvester-Hadamard, bent translates, bent supports, Kerdock.

Every builder returns the code together with :class:`PredictedParams`, the
closed-form parameters claimed for it. Predictions are never trusted as
oracles: :func:`verify` recomputes everything from the ordered-pair envelope
and reports agreement or disagreement without raising.

Coordinate order: truth-table index for translates and Kerdock codes,
increasing index over the support for bent-support codes. Word order is the
lexicographic order of the parameters listed with each builder.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .boolean import BooleanFunction, inner_product_function, is_bent, parse_anf, support
from .errors import DegenerateCodeError, DimensionError, NotBentError, ParameterError
from .gf2 import FieldCtx, field_new, kerdock_set
from .metric import Code, profile
from .ratio import check_r, format_ratio

VERIFIED = "verified-formula"
UNDER_TEST = "claim-under-test"


@dataclass(frozen=True)
class PredictedParams:
    """Claimed (n, K) and a discrepancy formula alpha + beta * r.

    ``kind`` is ``"exact"`` or ``"lower_bound"``. ``alternatives`` holds other
    published candidate formulas worth checking against the brute force.
    """

    n: int
    K: int
    alpha: Fraction
    beta: Fraction
    kind: str
    d_H_claim: Fraction
    source: str
    trust: str
    alternatives: dict[str, tuple[Fraction, Fraction]] = field(default_factory=dict)

    def value(self, r) -> Fraction:
        return self.alpha + self.beta * check_r(r)

    def to_dict(self) -> dict:
        out = {
            "alpha": format_ratio(self.alpha),
            "beta": format_ratio(self.beta),
            "kind": self.kind,
            "trust": self.trust,
            "d_H_claim": format_ratio(self.d_H_claim),
        }
        if self.alternatives:
            out["alternatives"] = {
                name: {"alpha": format_ratio(a), "beta": format_ratio(b)}
                for name, (a, b) in self.alternatives.items()
            }
        return out


@dataclass(frozen=True)
class Built:
    """A constructed code plus the metadata that goes into its JSON file."""

    construction: str
    code: Code
    predicted: PredictedParams
    m: int
    epsilon: int | None = None
    modulus: str | None = None
    extra: dict = field(default_factory=dict)


# -- Hadamard ---------------------------------------------------------------

def sylvester_hadamard(t: int) -> np.ndarray:
    """H of order 2^t as the t-fold Kronecker power of [[1, 1], [1, -1]]."""
    if not 1 <= t <= 16:
        raise ParameterError(f"t must be in [1, 16], got {t}")
    base = np.array([[1, 1], [1, -1]], dtype=np.int8)
    H = base
    for _ in range(t - 1):
        H = np.kron(H, base)
    return H


def hadamard_code(H: np.ndarray) -> Code:
    """Drop the all-ones first column and map +1 -> 0, -1 -> 1."""
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] < 2:
        raise DimensionError("expected a square matrix of order >= 2")
    if not np.isin(H, (1, -1)).all():
        raise ParameterError("Hadamard entries must be +1 or -1")
    if not (H[:, 0] == 1).all():
        raise ParameterError("first column is not normalized to all +1")
    n = H.shape[0]
    if n <= 1024:
        gram = H.astype(np.int64) @ H.T.astype(np.int64)
        if not np.array_equal(gram, n * np.eye(n, dtype=np.int64)):
            raise ParameterError("matrix is not Hadamard: H H^T != n I")
    return Code.from_bits((H[:, 1:] == -1).astype(np.uint8))


def build_hadamard(t: int) -> Built:
    code = hadamard_code(sylvester_hadamard(t))
    half = Fraction(1 << (t - 1))
    predicted = PredictedParams(
        n=(1 << t) - 1, K=1 << t, alpha=half, beta=Fraction(0), kind="exact",
        d_H_claim=half, source="hadamard", trust=VERIFIED,
    )
    return Built("hadamard", code, predicted, m=t, extra={"order": 1 << t})


# -- bent translates --------------------------------------------------------

def _require_bent(f: BooleanFunction) -> int:
    bent, eps = is_bent(f)
    if not bent:
        raise NotBentError("construction needs a bent function")
    return eps


def construction_a(f: BooleanFunction) -> tuple[Code, PredictedParams]:
    """Words (f(x + a) + b) over all x, ordered by (a, b)."""
    _require_bent(f)
    m, k = f.m, f.m // 2
    idx = np.arange(1 << m)
    rows = np.empty((1 << (m + 1), 1 << m), dtype=np.uint8)
    for a in range(1 << m):
        shifted = f.table[idx ^ a]
        rows[2 * a] = shifted
        rows[2 * a + 1] = shifted ^ 1
    code = Code.from_bits(rows)
    q = Fraction(1 << m, 4)
    h = Fraction(1 << (k + 1), 4)
    predicted = PredictedParams(
        n=1 << m, K=1 << (m + 1), alpha=q + h, beta=q - h, kind="exact",
        d_H_claim=Fraction(1 << (m - 1)), source="construction-a", trust=VERIFIED,
    )
    return code, predicted


def puncture_first(code: Code, alpha: int) -> Code:
    """Words whose first coordinate equals alpha, with that coordinate removed."""
    if alpha not in (0, 1):
        raise ParameterError("alpha must be 0 or 1")
    if code.n < 2:
        raise DimensionError("cannot puncture a length-1 code")
    bits = code.bits()
    keep = bits[bits[:, 0] == alpha, 1:]
    if keep.shape[0] == 0:
        raise DegenerateCodeError(f"no word starts with {alpha}")
    return Code.from_bits(keep)


# -- bent support -----------------------------------------------------------

def construction_b(f: BooleanFunction) -> tuple[Code, PredictedParams]:
    """Words (a . x + b) over x in the support of f, for (a, b) != (0, 0)."""
    _require_bent(f)
    m, k = f.m, f.m // 2
    if m < 4:
        raise ParameterError("bent-support codes need m >= 4")
    D = support(f).index
    n = len(D)
    a = np.arange(1 << m, dtype=np.int64)
    dots = (np.bitwise_count(a[:, None] & D[None, :]) & 1).astype(np.uint8)
    rows = np.empty((2 << m, n), dtype=np.uint8)
    rows[0::2] = dots
    rows[1::2] = dots ^ 1
    code = Code.from_bits(rows[1:])

    base = Fraction(n - (1 << (k - 1)), 4)

    def form(sign: int) -> tuple[Fraction, Fraction]:
        tail = Fraction((1 << (m - 1)) + sign * (1 << k), 4)
        return base + tail, base - tail

    stated, variant = form(-1), form(+1)
    predicted = PredictedParams(
        n=n, K=(1 << (m + 1)) - 1, alpha=stated[0], beta=stated[1], kind="exact",
        d_H_claim=Fraction(n - (1 << (k - 1)), 2), source="construction-b", trust=UNDER_TEST,
        alternatives={"stated": stated, "variant": variant},
    )
    return code, predicted


# -- Kerdock ----------------------------------------------------------------

def _kerdock_rows(m: int, ctx: FieldCtx) -> np.ndarray:
    """All words f_u + Tr(a x) + a_m x_m, ordered by (u, a, a_m)."""
    q = ctx.order
    xs = np.arange(q, dtype=np.int64)
    x_m = np.repeat(np.array([0, 1], dtype=np.uint8), q)
    linear = np.empty((2 * q, 2 * q), dtype=np.uint8)
    for a in range(q):
        tr = ctx.traces[ctx.mul_vec(xs, a)].astype(np.uint8)
        word = np.concatenate([tr, tr])
        linear[2 * a] = word
        linear[2 * a + 1] = word ^ x_m
    rows = np.empty((q * 2 * q, 2 * q), dtype=np.uint8)
    for u, f in enumerate(kerdock_set(m, ctx)):
        rows[u * 2 * q:(u + 1) * 2 * q] = linear ^ f.table[None, :]
    return rows


def kerdock_full_code(m: int, ctx: FieldCtx | None = None) -> Code:
    """All 2^(2m-1) words including the zero word (raises if any coincide)."""
    _check_kerdock_m(m)
    ctx = field_new(m - 1) if ctx is None else ctx
    return Code.from_bits(_kerdock_rows(m, ctx))


def _check_kerdock_m(m: int) -> None:
    if m % 2 or m < 4:
        raise ParameterError(f"Kerdock codes need even m >= 4, got {m}")


def construction_c(m: int, ctx: FieldCtx | None = None) -> tuple[Code, PredictedParams]:
    """Kerdock words with the zero word (u, a, a_m) = (0, 0, 0) removed."""
    _check_kerdock_m(m)
    ctx = field_new(m - 1) if ctx is None else ctx
    rows = _kerdock_rows(m, ctx)
    if rows[0].any():
        raise AssertionError("first Kerdock word should be zero")
    code = Code.from_bits(rows[1:])
    k = m // 2
    quarter = Fraction(1 << m, 4)
    small = Fraction(1 << k, 4)
    predicted = PredictedParams(
        n=1 << m, K=(1 << (2 * m - 1)) - 1, alpha=quarter + small, beta=quarter - 3 * small,
        kind="lower_bound", d_H_claim=Fraction((1 << (m - 1)) - (1 << k)),
        source="construction-c", trust=UNDER_TEST,
    )
    return code, predicted


# -- registry ---------------------------------------------------------------

ALIASES = {
    "hadamard": "hadamard",
    "construction-a": "construction-a",
    "bent-translate": "construction-a",
    "construction-b": "construction-b",
    "bent-support": "construction-b",
    "construction-c": "construction-c",
    "kerdock": "construction-c",
}


def default_bent(m: int, epsilon: int) -> BooleanFunction:
    """Inner-product bent function; epsilon = +1 selects its complement."""
    if epsilon not in (1, -1):
        raise ParameterError("epsilon must be +1 or -1")
    return inner_product_function(m, complement=epsilon == 1)


def build(construction: str, *, m: int | None = None, t: int | None = None,
          anf: str | None = None, epsilon: int | None = None,
          puncture: int | None = None) -> Built:
    """Build a named construction with CLI-style parameters."""
    try:
        cid = ALIASES[construction]
    except KeyError:
        raise ParameterError(f"unknown construction {construction!r}; choose from {sorted(ALIASES)}") from None

    if cid == "hadamard":
        t = t if t is not None else m
        if t is None:
            raise ParameterError("hadamard needs t (order 2^t)")
        return build_hadamard(t)

    if m is None:
        raise ParameterError(f"{cid} needs m")

    if cid == "construction-c":
        _check_kerdock_m(m)
        ctx = field_new(m - 1)
        code, predicted = construction_c(m, ctx)
        return Built(cid, code, predicted, m=m, modulus=ctx.modulus_hex)

    if anf is not None:
        f = parse_anf(anf, m)
    else:
        f = default_bent(m, epsilon if epsilon is not None else (1 if cid == "construction-b" else -1))
    eps = _require_bent(f)
    if cid == "construction-a":
        code, predicted = construction_a(f)
        extra = {}
        if puncture is not None:
            code = puncture_first(code, puncture)
            predicted = PredictedParams(
                n=predicted.n - 1, K=predicted.K // 2, alpha=predicted.alpha, beta=predicted.beta,
                kind="exact", d_H_claim=predicted.d_H_claim, source="construction-a-punctured",
                trust=UNDER_TEST,
            )
            extra["puncture"] = puncture
        return Built(cid, code, predicted, m=m, epsilon=eps, extra=extra)
    code, predicted = construction_b(f)
    return Built(cid, code, predicted, m=m, epsilon=eps)


# -- verification -----------------------------------------------------------

@dataclass(frozen=True)
class RCheck:
    r: Fraction
    predicted: Fraction
    brute_force: Fraction
    witness: tuple[int, int]
    kind: str

    @property
    def match(self) -> bool:
        if self.kind == "lower_bound":
            return self.brute_force >= self.predicted
        return self.brute_force == self.predicted

    def to_dict(self) -> dict:
        out = {
            "predicted": format_ratio(self.predicted),
            "brute_force": format_ratio(self.brute_force),
            "match": self.match,
            "witness": list(self.witness),
        }
        if self.kind == "lower_bound":
            out["tight"] = self.brute_force == self.predicted
        return out


@dataclass(frozen=True)
class VerificationReport:
    built: Built
    K: int
    d_H: int
    checks: tuple[RCheck, ...]
    alternatives: dict[str, tuple[bool, ...]]

    @property
    def K_match(self) -> bool:
        return self.K == self.built.predicted.K

    @property
    def d_H_match(self) -> bool:
        return self.d_H == self.built.predicted.d_H_claim

    @property
    def all_match(self) -> bool:
        return self.K_match and all(c.match for c in self.checks)

    def matching_alternatives(self) -> list[str]:
        return sorted(name for name, flags in self.alternatives.items() if flags and all(flags))

    def to_dict(self) -> dict:
        b = self.built
        p = b.predicted
        out = {
            "construction": b.construction,
            "m": b.m,
            "modulus": b.modulus,
            "epsilon": b.epsilon,
            "n": b.code.n,
            "K": self.K,
            "predicted": {**p.to_dict(), "n": p.n, "K": p.K},
            "checks": {
                "n_match": b.code.n == p.n,
                "K_match": self.K_match,
                "d_H": self.d_H,
                "d_H_claim": format_ratio(p.d_H_claim),
                "d_H_match": self.d_H_match,
                "d_H_at_r1_of_formula": format_ratio(p.value(1)),
            },
            "verified": {format_ratio(c.r): c.to_dict() for c in self.checks},
        }
        if self.alternatives:
            out["alternatives"] = {
                name: {"per_r": {format_ratio(c.r): ok for c, ok in zip(self.checks, flags)}, "matches_all": all(flags)}
                for name, flags in self.alternatives.items()
            }
            out["matching_alternatives"] = self.matching_alternatives()
        out.update(b.extra)
        return out


def verify_built(built: Built, r_values: Sequence) -> VerificationReport:
    """Compute the envelope once and compare every r against the prediction."""
    rs = [check_r(r) for r in r_values]
    prof = profile(built.code)
    p = built.predicted
    checks = []
    for r in rs:
        value, witness = prof.evaluate(r)
        checks.append(RCheck(r, p.value(r), value, witness, p.kind))
    alternatives = {
        name: tuple(c.brute_force == a + b * c.r for c in checks)
        for name, (a, b) in p.alternatives.items()
    }
    return VerificationReport(built, built.code.K, prof.min_hamming(), tuple(checks), alternatives)


def verify(construction: str, r_values: Sequence, **params) -> VerificationReport:
    return verify_built(build(construction, **params), r_values)


def metadata(built: Built) -> dict:
    """Construction metadata written next to a constructed code file."""
    p = built.predicted
    out = {
        "construction": built.construction,
        "m": built.m,
        "modulus": built.modulus,
        "epsilon": built.epsilon,
        "n": built.code.n,
        "K": built.code.K,
        "predicted": {**p.to_dict(), "n": p.n, "K": p.K},
        "verified": {},
    }
    out.update(built.extra)
    return out
