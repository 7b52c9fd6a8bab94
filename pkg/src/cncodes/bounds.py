"""Singleton, Hamming and Plotkin bounds for the discrepancy, and optimality.

All bound arithmetic is exact: r and delta are Fractions and binomial sums
are Python integers. Two floor conventions appear:

* the Hamming radius uses the *strict* floor (largest integer strictly below
  delta / (r + 1)), so for r = 1 it is t = (d_H - 1) // 2;
* the Plotkin right-hand side uses the ordinary floor.

Passing ``delta = d_H`` and ``r = 1`` to any check gives the classical bound
for the Hamming distance. The Plotkin denominator is ``2d - n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .metric import Code, min_discrepancy, min_hamming, require_pairs
from .ratio import as_ratio, ceil, check_r, floor, format_ratio, strict_floor

KINDS = ("singleton", "hamming", "plotkin")


@dataclass(frozen=True)
class ChannelParams:
    """Binary asymmetric channel: p = P(0 -> 1), q = P(1 -> 0)."""

    p: float
    q: float

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0:
            raise ParameterError("p = 0 gives r = infinity, which is not supported")
        if not (0 < p <= q < 0.5):
            raise ParameterError(f"need 0 < p <= q < 1/2, got p={p}, q={q}")


def channel_r(params: ChannelParams | None = None, *, p: float | None = None, q: float | None = None) -> float:
    """r = log base q/(1-p) of p/(1-q). Floating point; the only inexact entry."""
    if params is None:
        params = ChannelParams(p, q)
    p, q = params.p, params.q
    if p == q:
        return 1.0
    return math.log(p / (1 - q)) / math.log(q / (1 - p))


@dataclass(frozen=True)
class BoundStatus:
    kind: str
    applicable: bool
    parameter: int | None  # c for Singleton, T for Hamming, d for Plotkin
    rhs: Fraction | None  # bound on K
    holds: bool
    meets: bool
    slack: Fraction | None  # rhs - K

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "applicable": self.applicable,
            "parameter": self.parameter,
            "rhs": None if self.rhs is None else format_ratio(self.rhs),
            "holds": self.holds,
            "meets": self.meets,
            "slack": None if self.slack is None else format_ratio(self.slack),
        }


def _validate(n: int, K: int, delta, r) -> tuple[Fraction, Fraction]:
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if K < 2:
        raise ParameterError(f"K must be at least 2, got {K}")
    delta = as_ratio(delta)
    if delta <= 0:
        raise ParameterError("delta must be positive")
    return delta, check_r(r)


def _status(kind: str, K: int, parameter: int, rhs: Fraction, meets: bool) -> BoundStatus:
    return BoundStatus(kind, True, parameter, rhs, K <= rhs, meets, rhs - K)


def singleton_check(n: int, K: int, delta, r=1) -> BoundStatus:
    """log2 K <= n - ceil(2 delta / (r + 1)) + 1, i.e. K <= 2^(n - c + 1)."""
    delta, r = _validate(n, K, delta, r)
    c = ceil(2 * delta / (r + 1))
    rhs = Fraction(2) ** (n - c + 1)
    return _status("singleton", K, c, rhs, K == rhs)


def sphere_volume(n: int, radius: int) -> int:
    return sum(math.comb(n, i) for i in range(min(radius, n) + 1))


def hamming_check(n: int, K: int, delta, r=1, *, strict: bool = True) -> BoundStatus:
    """K <= 2^n / V(n, T) with T the strict floor of delta / (r + 1).

    ``strict=False`` swaps in the ordinary floor, for comparison only.
    """
    delta, r = _validate(n, K, delta, r)
    x = delta / (r + 1)
    T = strict_floor(x) if strict else floor(x)
    vol = sphere_volume(n, T)
    rhs = Fraction(2**n, vol)
    return _status("hamming", K, T, rhs, K * vol == 2**n)


def plotkin_check(n: int, K: int, delta, r=1) -> BoundStatus:
    """With d = ceil(2 delta / (r + 1)) and 2d > n: K <= floor(2d / (2d - n))."""
    delta, r = _validate(n, K, delta, r)
    d = ceil(2 * delta / (r + 1))
    if 2 * d <= n:
        return BoundStatus("plotkin", False, d, None, True, False, None)
    rhs = Fraction(floor(Fraction(2 * d, 2 * d - n)))
    return _status("plotkin", K, d, rhs, K == rhs)


CHECKS = {"singleton": singleton_check, "hamming": hamming_check, "plotkin": plotkin_check}


@dataclass(frozen=True)
class BoundVerdict:
    """One bound's optimality verdict, computed two independent ways.

    ``reaches_for_delta_r`` is direct equality in the discrepancy bound.
    ``characterization`` is the d_H-based criterion: d_H-bound equality plus
    delta_r > (r+1)/2 (d_H - 1) for Singleton/Plotkin, or d_H = 2t + 1 odd plus
    delta_r > t (r + 1) for Hamming.
    """

    kind: str
    delta_bound: BoundStatus
    dH_bound: BoundStatus
    reaches_for_dH: bool
    reaches_for_delta_r: bool
    condition_lhs: Fraction
    condition_rhs: Fraction
    condition_holds: bool
    d_H_odd: bool | None
    characterization: bool
    r_threshold: Fraction | None
    below_r_threshold: bool | None

    @property
    def agree(self) -> bool:
        return self.reaches_for_delta_r == self.characterization

    def to_dict(self) -> dict:
        return {
            "reaches_for_dH": self.reaches_for_dH,
            "reaches_for_delta_r": self.reaches_for_delta_r,
            "condition": {
                "lhs": format_ratio(self.condition_lhs),
                "rhs": format_ratio(self.condition_rhs),
                "holds": self.condition_holds,
            },
            "d_H_odd": self.d_H_odd,
            "characterization": self.characterization,
            "agree": self.agree,
            "r_threshold": None if self.r_threshold is None else format_ratio(self.r_threshold),
            "below_r_threshold": self.below_r_threshold,
            "dH_bound": self.dH_bound.to_dict(),
        }


@dataclass(frozen=True)
class OptimalityReport:
    n: int
    K: int
    d_H: int
    r: Fraction
    delta_r: Fraction
    witness: tuple[int, int]
    verdicts: dict[str, BoundVerdict]

    @property
    def consistent(self) -> bool:
        return all(v.agree for v in self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "d_H": self.d_H,
            "r": format_ratio(self.r),
            "delta_r": format_ratio(self.delta_r),
            "witness": list(self.witness),
            "bounds": {k: v.delta_bound.to_dict() for k, v in self.verdicts.items()},
            "theorem24": {k: v.to_dict() for k, v in self.verdicts.items()},
        }


def _verdict(kind: str, n: int, K: int, d_H: int, delta: Fraction, r: Fraction) -> BoundVerdict:
    check = CHECKS[kind]
    delta_bound = check(n, K, delta, r)
    dH_bound = check(n, K, d_H, 1)
    if kind == "hamming":
        t = (d_H - 1) // 2
        odd = d_H % 2 == 1
        lhs, rhs = delta, t * (r + 1)
        holds = lhs > rhs
        characterization = dH_bound.meets and odd and holds
        threshold = Fraction(t + 1, t) if odd and t > 0 else None
    else:
        odd = None
        lhs, rhs = delta, (r + 1) / 2 * (d_H - 1)
        holds = lhs > rhs
        characterization = dH_bound.meets and holds
        threshold = Fraction(d_H + 1, d_H - 1) if d_H > 1 else None
    return BoundVerdict(
        kind=kind,
        delta_bound=delta_bound,
        dH_bound=dH_bound,
        reaches_for_dH=dH_bound.meets,
        reaches_for_delta_r=delta_bound.meets,
        condition_lhs=lhs,
        condition_rhs=rhs,
        condition_holds=holds,
        d_H_odd=odd,
        characterization=characterization,
        r_threshold=threshold,
        below_r_threshold=None if threshold is None else r < threshold,
    )


def classify_optimality(code: Code, r) -> OptimalityReport:
    """Check each bound for delta_r directly and through the d_H criterion."""
    require_pairs(code)
    r = check_r(r)
    delta, witness = min_discrepancy(code, r)
    d_H = min_hamming(code)
    verdicts = {kind: _verdict(kind, code.n, code.K, d_H, delta, r) for kind in KINDS}
    return OptimalityReport(code.n, code.K, d_H, r, delta, witness, verdicts)
