# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Gray-code weight census and low-weight search.

Codewords are bit-packed into at most 16 little-endian uint64 words
(length <= 1023).  The pure-python module mirrors these routines; both
must stay behaviourally identical.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.string cimport memcpy

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline uint64_t _splitmix64(uint64_t *state) nogil:
    state[0] = state[0] + <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def weight_census(rows, int nbits, start=None):
    """Weight counts over {start + span(rows)} by Gray-code traversal."""
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] rarr = np.ascontiguousarray(rows, dtype=np.uint64)
    cdef int k = rarr.shape[0]
    cdef int nw = rarr.shape[1]
    if nw > 16:
        raise ValueError("at most 16 words (1024 bits) supported")
    if k > 30:
        raise ValueError("at most 2^30 codewords per census")
    counts_arr = np.zeros(nbits + 1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef uint64_t[:, ::1] rv = rarr
    cdef uint64_t word[16]
    cdef cnp.ndarray[cnp.uint64_t, ndim=1, mode="c"] sarr
    cdef uint64_t i, total
    cdef int j, w, t
    for j in range(16):
        word[j] = 0
    if start is not None:
        sarr = np.ascontiguousarray(start, dtype=np.uint64)
        for j in range(nw):
            word[j] = sarr[j]
    total = (<uint64_t>1) << k
    with nogil:
        w = 0
        for j in range(nw):
            w += __builtin_popcountll(word[j])
        counts[w] += 1
        i = 1
        while i < total:
            t = __builtin_ctzll(i)
            w = 0
            for j in range(nw):
                word[j] ^= rv[t, j]
                w += __builtin_popcountll(word[j])
            counts[w] += 1
            i += 1
    return counts_arr


def lowweight_search(rows, int nbits, long iterations, unsigned long long seed, int stop_at=0):
    """Best nonzero codeword weight found by information-set restarts."""
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] rarr = np.ascontiguousarray(rows, dtype=np.uint64)
    cdef int k = rarr.shape[0]
    cdef int nw = rarr.shape[1]
    if k == 0:
        return -1
    if nw > 16:
        raise ValueError("at most 16 words (1024 bits) supported")
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] warr = np.zeros((k, nw), dtype=np.uint64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] parr = np.zeros(nbits, dtype=np.int32)
    cdef uint64_t[:, ::1] orig = rarr
    cdef uint64_t[:, ::1] work = warr
    cdef int[::1] perm = parr
    cdef uint64_t state = seed
    cdef uint64_t z
    cdef uint64_t tmp[16]
    cdef int best = nbits + 1
    cdef long it
    cdef int n = nbits
    cdef int i, j, col, wi, r, p, t, w, bidx
    cdef uint64_t bit
    with nogil:
        for it in range(iterations):
            for i in range(n):
                perm[i] = i
            for i in range(n - 1, 0, -1):
                z = _splitmix64(&state)
                j = <int>(z % <uint64_t>(i + 1))
                t = perm[i]
                perm[i] = perm[j]
                perm[j] = t
            memcpy(&work[0, 0], &orig[0, 0], k * nw * sizeof(uint64_t))
            r = 0
            for wi in range(n):
                col = perm[wi]
                bidx = col >> 6
                bit = (<uint64_t>1) << (col & 63)
                p = -1
                for t in range(r, k):
                    if work[t, bidx] & bit:
                        p = t
                        break
                if p < 0:
                    continue
                if p != r:
                    for j in range(nw):
                        tmp[j] = work[r, j]
                        work[r, j] = work[p, j]
                        work[p, j] = tmp[j]
                for t in range(k):
                    if t != r and (work[t, bidx] & bit):
                        for j in range(nw):
                            work[t, j] ^= work[r, j]
                r += 1
                if r == k:
                    break
            for i in range(k):
                w = 0
                for j in range(nw):
                    w += __builtin_popcountll(work[i, j])
                if 0 < w < best:
                    best = w
                for t in range(i + 1, k):
                    w = 0
                    for j in range(nw):
                        w += __builtin_popcountll(work[i, j] ^ work[t, j])
                    if 0 < w < best:
                        best = w
            if best <= stop_at:
                break
    return best
