"""Kernel dispatch: compiled extension when built, pure python otherwise."""

from __future__ import annotations

import numpy as np

try:
    from . import _corekernels as _impl

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _purekernels as _impl

    HAVE_COMPILED = False

MAX_CENSUS_DIM = 30
MAX_WORDS = 16


def _validate(rows: np.ndarray, nbits: int):
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    if rows.ndim != 2:
        raise ValueError("packed row matrix expected")
    if rows.shape[1] > MAX_WORDS:
        raise ValueError(f"length {nbits} exceeds the {64 * MAX_WORDS}-bit packing limit")
    return rows


def weight_census(rows: np.ndarray, nbits: int, start=None) -> np.ndarray:
    """Exact weight counts of {start + span(rows)}; 2^k words enumerated."""
    rows = _validate(rows, nbits)
    if rows.shape[0] > MAX_CENSUS_DIM:
        raise ValueError(f"census over 2^{rows.shape[0]} words exceeds the hard cap 2^{MAX_CENSUS_DIM}")
    return _impl.weight_census(rows, nbits, start)


def lowweight_search(rows: np.ndarray, nbits: int, iterations: int, seed: int, stop_at: int = 0) -> int:
    """Randomized low-weight codeword search; -1 signals the zero code."""
    rows = _validate(rows, nbits)
    return _impl.lowweight_search(rows, nbits, int(iterations), int(seed) & ((1 << 64) - 1), int(stop_at))
