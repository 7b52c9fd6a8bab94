"""Slow, obviously-correct reference computations used as test oracles.

Nothing here touches the packed representation or the kernels.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def pair_counts(y: str, x: str) -> tuple[int, int]:
    assert len(y) == len(x)
    d10 = sum(1 for a, b in zip(y, x) if (a, b) == ("1", "0"))
    d01 = sum(1 for a, b in zip(y, x) if (a, b) == ("0", "1"))
    return d10, d01


def delta(y: str, x: str, r) -> Fraction:
    d10, d01 = pair_counts(y, x)
    return Fraction(r) * d10 + d01


def min_delta(words: list[str], r) -> tuple[Fraction, tuple[int, int]]:
    """Minimum over ordered pairs; ties broken by the smallest (i, j)."""
    best = None
    for i, j in itertools.permutations(range(len(words)), 2):
        cand = (delta(words[i], words[j], r), (i, j))
        if best is None or cand < best:
            best = cand
    return best


def min_hamming(words: list[str]) -> int:
    return min(sum(a != b for a, b in zip(x, y)) for x, y in itertools.combinations(words, 2))


def pareto(points: set[tuple[int, int]]) -> set[tuple[int, int]]:
    return {p for p in points if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in points)}


def all_pair_points(words: list[str]) -> set[tuple[int, int]]:
    return {pair_counts(words[i], words[j]) for i, j in itertools.permutations(range(len(words)), 2)}


def naive_walsh(table, m: int) -> list[int]:
    return [
        sum((-1) ** ((int(table[x]) + bin(x & y).count("1")) % 2) for x in range(1 << m))
        for y in range(1 << m)
    ]


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    q = 0
    while a and a.bit_length() >= b.bit_length():
        s = a.bit_length() - b.bit_length()
        q ^= 1 << s
        a ^= b << s
    return q, a


def smallest_irreducible_by_products(d: int) -> int:
    """Smallest degree-d mask that is not a product of two lower-degree polynomials."""
    reducible = set()
    for a in range(2, 1 << d):
        for b in range(2, 1 << d):
            p = poly_mul(a, b)
            if p.bit_length() - 1 == d:
                reducible.add(p)
    return min(p for p in range(1 << d, 1 << (d + 1)) if p not in reducible)


def field_mul(a: int, b: int, modulus: int) -> int:
    return poly_divmod(poly_mul(a, b), modulus)[1]


def anf_eval(monomials: list[tuple[int, ...]], x: int) -> int:
    """Evaluate a sum of monomials (tuples of 1-based variable indices) at x."""
    total = 0
    for mono in monomials:
        total ^= all((x >> (i - 1)) & 1 for i in mono)
    return total
