"""Dense linear algebra over prime fields GF(q), on numpy arrays.

Row reduction is plain Gaussian elimination with modular arithmetic;
q stays small (binary in all the shipped parameter sets), so int64
intermediates never overflow.
"""

from __future__ import annotations

import numpy as np


def rref_mod(M, q: int):
    """Reduced row-echelon form over GF(q).

    Returns (R, pivot_cols); R has the same shape as M.
    """
    R = (np.asarray(M, dtype=np.int64) % q).copy()
    if R.ndim != 2:
        raise ValueError("matrix expected")
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, col])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        inv = pow(int(R[r, col]), q - 2, q) if q > 2 else 1
        if inv != 1:
            R[r] = (R[r] * inv) % q
        others = np.nonzero(R[:, col])[0]
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, col], R[r])) % q
        pivots.append(col)
        r += 1
    return R, pivots


def rank_mod(M, q: int) -> int:
    return len(rref_mod(M, q)[1])


def nullspace_mod(M, q: int) -> np.ndarray:
    """Basis of the right kernel {x : M x = 0 mod q}, one vector per row."""
    M = np.asarray(M, dtype=np.int64) % q
    m, n = M.shape
    R, pivots = rref_mod(M, q)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, f])) % q
    return basis


def solve_mod(A, b, q: int) -> np.ndarray:
    """Solve A x = b over GF(q); A must be square and invertible."""
    A = np.asarray(A, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64) % q
    m, n = A.shape
    if m != n:
        raise ValueError("square system expected")
    aug = np.concatenate([A, b.reshape(n, 1)], axis=1)
    R, pivots = rref_mod(aug, q)
    if pivots != list(range(n)):
        raise np.linalg.LinAlgError("singular system over GF(q)")
    return R[:, n].astype(np.uint8)


def row_space_equal(A, B, q: int) -> bool:
    """Whether two generator matrices span the same GF(q) row space."""
    RA, pa = rref_mod(A, q)
    RB, pb = rref_mod(B, q)
    if pa != pb:
        return False
    return bool(np.array_equal(RA[: len(pa)], RB[: len(pb)]))


# ---------------------------------------------------------------------------
# Bit packing for the GF(2) kernels
# ---------------------------------------------------------------------------

def pack_rows(G) -> np.ndarray:
    """Pack a binary (k, n) matrix into (k, ceil(n/64)) uint64 words.

    Bit j of a row lands in word j // 64, position j % 64 (little endian,
    matching the compiled kernels).
    """
    G = np.asarray(G, dtype=np.uint8) % 2
    if G.ndim != 2:
        raise ValueError("matrix expected")
    k, n = G.shape
    nwords = max(1, (n + 63) // 64)
    padded = np.zeros((k, nwords * 64), dtype=np.uint8)
    padded[:, :n] = G
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)
