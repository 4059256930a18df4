"""Pure-python implementations of the hot kernels.

Same contracts, same RNG (splitmix64) and same traversal order as the
compiled module, so both produce bit-identical results.  Used when the
extension is unavailable and by the benchmark.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rows_as_ints(rows: np.ndarray) -> list[int]:
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    return [int.from_bytes(rows[i].tobytes(), "little") for i in range(rows.shape[0])]


def weight_census(rows: np.ndarray, nbits: int, start=None) -> np.ndarray:
    """Weight counts over {start + span(rows)} by Gray-code traversal."""
    k = rows.shape[0]
    ints = _rows_as_ints(rows)
    word = 0
    if start is not None:
        word = int.from_bytes(np.ascontiguousarray(start, dtype=np.uint64).tobytes(), "little")
    counts = [0] * (nbits + 1)
    counts[word.bit_count()] += 1
    for i in range(1, 1 << k):
        word ^= ints[(i & -i).bit_length() - 1]
        counts[word.bit_count()] += 1
    return np.array(counts, dtype=np.int64)


def lowweight_search(rows: np.ndarray, nbits: int, iterations: int, seed: int, stop_at: int = 0) -> int:
    """Best nonzero codeword weight found by information-set restarts.

    Each restart draws a random column order, row-reduces along it and
    scans all weight-1 and weight-2 combinations of the reduced rows.
    Returns -1 when the code is {0}.
    """
    k = rows.shape[0]
    if k == 0:
        return -1
    ints = _rows_as_ints(rows)
    n = nbits
    best = n + 1
    state = seed & _MASK64
    for _ in range(iterations):
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            state, z = _splitmix64(state)
            j = z % (i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        work = ints.copy()
        r = 0
        for col in perm:
            bit = 1 << col
            p = -1
            for t in range(r, k):
                if work[t] & bit:
                    p = t
                    break
            if p < 0:
                continue
            work[r], work[p] = work[p], work[r]
            wr = work[r]
            for t in range(k):
                if t != r and (work[t] & bit):
                    work[t] ^= wr
            r += 1
            if r == k:
                break
        for i in range(k):
            w = work[i].bit_count()
            if 0 < w < best:
                best = w
            wi = work[i]
            for j in range(i + 1, k):
                w = (wi ^ work[j]).bit_count()
                if 0 < w < best:
                    best = w
        if best <= stop_at:
            break
    return best
