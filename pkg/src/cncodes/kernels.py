"""Hot numeric kernels: ordered-pair discrepancy envelope and the fast WHT.

Each kernel exists twice, a numba ``@njit`` version and a pure-numpy version.
Which one the public dispatchers use is decided by the ``CNCODES_BACKEND``
environment variable (``numba`` or ``numpy``); when it is unset numba is used
if it imports. Both paths must return identical arrays.

Envelope encoding
-----------------
For a code of K packed words the envelope kernel returns ``best[n + 1]``
(int64). ``best[a]`` packs, for ordered pairs (i, j) with d10 = a, the smallest
d01 together with the lexicographically smallest (i, j) reaching it::

    key = d01 * K*K + i*K + j

``EMPTY`` marks d10 values no pair produced.
"""
from __future__ import annotations

import os

import numpy as np

EMPTY = np.iinfo(np.int64).max

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False
else:
    HAVE_NUMBA = True


def _initial_backend() -> str:
    choice = os.environ.get("CNCODES_BACKEND", "").strip().lower()
    if choice in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise RuntimeError(f"CNCODES_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not HAVE_NUMBA:
        raise RuntimeError("CNCODES_BACKEND=numba but numba is not importable")
    return choice


_backend = _initial_backend()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Switch kernels at runtime (tests and the benchmark use this)."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(name)
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------

def envelope_numpy(packed: np.ndarray, n: int) -> np.ndarray:
    K = packed.shape[0]
    KK = K * K
    best = np.full(n + 1, EMPTY, dtype=np.int64)
    idx = np.arange(K, dtype=np.int64)
    for i in range(K - 1):
        wi = packed[i]
        rest = packed[i + 1:]
        d10 = np.bitwise_count(wi & ~rest).sum(axis=1, dtype=np.int64)
        d01 = np.bitwise_count(~wi & rest).sum(axis=1, dtype=np.int64)
        j = idx[i + 1:]
        # (i, j) yields (d10, d01); (j, i) yields the swap.
        np.minimum.at(best, d10, d01 * KK + i * K + j)
        np.minimum.at(best, d01, d10 * KK + j * K + i)
    return best


def fwht_numpy(values: np.ndarray) -> np.ndarray:
    a = np.array(values, dtype=np.int64)
    size = a.shape[0]
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        lo = a[:, 0, :].copy()
        hi = a[:, 1, :]
        a[:, 0, :] += hi
        a[:, 1, :] = lo - hi
        a = a.reshape(size)
        h *= 2
    return a


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True, inline="always")
    def _popcount64(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)

    @njit(cache=True)
    def envelope_numba(packed, n):
        K = packed.shape[0]
        L = packed.shape[1]
        KK = np.int64(K) * np.int64(K)
        best = np.full(n + 1, EMPTY, dtype=np.int64)
        for i in range(K - 1):
            for j in range(i + 1, K):
                a = np.int64(0)
                b = np.int64(0)
                for t in range(L):
                    x = packed[i, t]
                    y = packed[j, t]
                    a += np.int64(_popcount64(x & ~y))
                    b += np.int64(_popcount64(~x & y))
                key = b * KK + i * K + j
                if key < best[a]:
                    best[a] = key
                key = a * KK + j * K + i
                if key < best[b]:
                    best[b] = key
        return best

    @njit(cache=True)
    def _fwht_inplace(a):
        size = a.shape[0]
        h = 1
        while h < size:
            for start in range(0, size, 2 * h):
                for k in range(start, start + h):
                    x = a[k]
                    y = a[k + h]
                    a[k] = x + y
                    a[k + h] = x - y
            h *= 2

    def fwht_numba(values: np.ndarray) -> np.ndarray:
        a = np.array(values, dtype=np.int64)
        _fwht_inplace(a)
        return a

else:  # pragma: no cover
    envelope_numba = None
    fwht_numba = None


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------

def pair_envelope(packed: np.ndarray, n: int) -> np.ndarray:
    packed = np.ascontiguousarray(packed, dtype=np.uint64)
    if _backend == "numba":
        return envelope_numba(packed, n)
    return envelope_numpy(packed, n)


def fwht(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2^m integer vector."""
    size = len(values)
    if size & (size - 1):
        raise ValueError("transform length must be a power of two")
    if _backend == "numba":
        return fwht_numba(values)
    return fwht_numpy(values)
