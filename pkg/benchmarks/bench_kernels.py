"""Compare the jitted and pure-numpy connected-mask enumeration kernels.

Usage:
    python3 benchmarks/bench_kernels.py [--max-n N] [--repeat R]

Both code paths are timed on the same inputs and their outputs compared.
The first jitted call is reported separately because it includes compilation.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from chromaspec._kernels import (
    _connected_masks_numpy,
    _connected_masks_python,
    _jitted,
    pair_bit_index,
)


def time_fn(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _jitted is None:
        print("numba unavailable or disabled; timing the python twin instead")
        fast = _connected_masks_python
    else:
        fast = _jitted
        # warm-up: the first call compiles
        start = time.perf_counter()
        fast(3, pair_bit_index(3))
        print(f"jit warm-up (n=3, includes compilation): {time.perf_counter() - start:.3f}s")

    header = f"{'n':>3} {'masks':>10} {'jit/python':>12} {'numpy':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in range(3, args.max_n + 1):
        idx = pair_bit_index(n)
        t_fast, out_fast = time_fn(lambda: fast(n, idx), args.repeat)
        t_np, out_np = time_fn(lambda: _connected_masks_numpy(n), args.repeat)
        if not np.array_equal(np.sort(np.asarray(out_fast)), np.sort(out_np)):
            print(f"n={n}: OUTPUT MISMATCH")
            return 1
        speedup = t_np / t_fast if t_fast > 0 else float("inf")
        print(f"{n:>3} {len(out_np):>10} {t_fast:>11.4f}s {t_np:>11.4f}s {speedup:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
