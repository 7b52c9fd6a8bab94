"""Compare the numba and numpy kernels on the two hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case is run once untimed (JIT compilation), then timed as the best of N.
"""
import argparse
import time

import numpy as np

from cncodes import kernels
from cncodes.constructions import build
from cncodes.metric import pack_bits


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    kerdock = build("kerdock", m=6).code
    yield "envelope kerdock m=6 (n=64, K=2047)", lambda: kernels.pair_envelope(kerdock.packed, kerdock.n)
    words = rng.integers(0, 2, size=(1500, 300)).astype(np.uint8)
    packed = pack_bits(words)
    yield "envelope random (n=300, K=1500)", lambda: kernels.pair_envelope(packed, 300)
    signs = 1 - 2 * rng.integers(0, 2, size=1 << 20).astype(np.int64)
    yield "fwht m=20", lambda: kernels.fwht(signs)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    previous = kernels.get_backend()
    print(f"{'case':40s}" + "".join(f"{b:>12s}" for b in backends) + ("   speedup" if len(backends) == 2 else ""))
    for name, fn in cases():
        row = []
        for backend in backends:
            kernels.set_backend(backend)
            row.append(best_of(fn, args.repeat))
        line = f"{name:40s}" + "".join(f"{t * 1e3:10.1f}ms" for t in row)
        if len(row) == 2:
            line += f"   {row[0] / row[1]:7.1f}x"
        print(line)
    kernels.set_backend(previous)


if __name__ == "__main__":
    main()
