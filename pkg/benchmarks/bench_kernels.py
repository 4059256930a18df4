#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-python fallbacks.

Runs the Gray-code weight census and the low-weight search on the same
inputs through both implementations and prints timings plus speedups.
Outputs are asserted identical, so this doubles as an equivalence check.
"""

import argparse
import time

import numpy as np

from cyclopir import linalg
from cyclopir.cyclic import code_from_cosets
from cyclopir import _purekernels

try:
    from cyclopir import _corekernels
except ImportError:
    _corekernels = None


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def bench_census(max_k):
    code = code_from_cosets([0, 1, 3, 5, 7, 9, 11, 13, 15], 127, 2)
    G = code.generator_matrix()
    print(f"weight census, n=127 code of dimension {code.dim}:")
    for k in range(16, max_k + 2, 4):
        rows = linalg.pack_rows(G[: min(k, code.dim)])
        pure, t_pure = timed(_purekernels.weight_census, rows, 127)
        line = f"  k={rows.shape[0]:2d}  pure {t_pure:8.3f}s"
        if _corekernels is not None:
            fast, t_fast = timed(_corekernels.weight_census, rows, 127)
            assert np.array_equal(pure, fast), "kernel outputs diverge"
            line += f"  compiled {t_fast:8.3f}s  speedup {t_pure / t_fast:7.1f}x"
        print(line)


def bench_search(iters):
    code = code_from_cosets([0, 1, 5, 9, 3, 11, 19, 21], 127, 2).dual()
    G = code.generator_matrix()
    rows = linalg.pack_rows(G)
    print(f"low-weight search, [{code.n},{code.dim}] code, {iters} restarts:")
    pure, t_pure = timed(_purekernels.lowweight_search, rows, 127, iters, 42)
    line = f"  best {pure:3d}  pure {t_pure:8.3f}s"
    if _corekernels is not None:
        fast, t_fast = timed(_corekernels.lowweight_search, rows, 127, iters, 42)
        assert pure == fast, "search results diverge"
        line += f"  compiled {t_fast:8.3f}s  speedup {t_pure / t_fast:7.1f}x"
    print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=24, help="largest census dimension (runtime doubles per +1)")
    ap.add_argument("--search-iters", type=int, default=100)
    args = ap.parse_args()
    if _corekernels is None:
        print("compiled extension not available; timing the pure fallback only")
    bench_census(args.max_k)
    bench_search(args.search_iters)


if __name__ == "__main__":
    main()
