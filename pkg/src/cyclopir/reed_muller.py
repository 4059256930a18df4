"""Binary Reed-Muller codes and their punctured / shortened variants.

Evaluation points are the integers 0..2^m-1 read as bit vectors, with
point 0 first, so "the coordinate at zero" is always column 0.  The
punctured code at zero is cyclic up to a coordinate permutation; its
cyclic realization is built from binary-weight classes of exponents and
cross-validated against the matrix construction by weight distribution,
never coordinate-wise.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from . import linalg
from .cyclic import CyclicCode

MAX_M = 12


def rm_parameters(r: int, m: int) -> tuple[int, int, int]:
    """[n, k, d] of the order-r Reed-Muller code in m variables."""
    _check_rm(r, m)
    return (2**m, sum(comb(m, i) for i in range(r + 1)), 2 ** (m - r))


def _check_rm(r: int, m: int):
    if m < 1 or m > MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}")
    if r < 0 or r > m:
        raise ValueError(f"order r={r} outside 0..m={m}")


def rm_generator_matrix(r: int, m: int) -> np.ndarray:
    """Rows are evaluations of all degree <= r multilinear monomials."""
    _check_rm(r, m)
    n = 2**m
    points = np.arange(n, dtype=np.uint32)
    coords = [(points >> i) & 1 for i in range(m)]
    rows = []
    for deg in range(r + 1):
        for subset in combinations(range(m), deg):
            row = np.ones(n, dtype=np.uint8)
            for i in subset:
                row = row * coords[i].astype(np.uint8)
            rows.append(row)
    G = np.array(rows, dtype=np.uint8)
    k = sum(comb(m, i) for i in range(r + 1))
    if linalg.rank_mod(G, 2) != k:
        raise AssertionError("Reed-Muller generator rank defect")
    return G


def puncture_at_zero(r: int, m: int) -> np.ndarray:
    """Drop the zero-point coordinate; parameters [2^m-1, k, 2^(m-r)-1]."""
    _check_rm(r, m)
    if r == 0:
        raise ValueError("puncturing the order-0 (repetition) code is rejected")
    if r == m:
        raise ValueError("puncturing the full space would drop the dimension")
    G = rm_generator_matrix(r, m)[:, 1:]
    if linalg.rank_mod(G, 2) != G.shape[0]:
        raise AssertionError("puncturing changed the dimension")
    return G


def shorten_at_zero(r: int, m: int) -> np.ndarray:
    """Keep codewords vanishing at zero, drop that coordinate.

    Parameters [2^m-1, k-1, 2^(m-r)].
    """
    _check_rm(r, m)
    G = rm_generator_matrix(r, m)
    k = G.shape[0]
    if k < 2:
        raise ValueError("shortening needs dimension at least 2")
    ones = np.nonzero(G[:, 0])[0]
    pivot = ones[0]
    for i in ones[1:]:
        G[i] ^= G[pivot]
    rows = [i for i in range(k) if i != pivot]
    S = G[rows][:, 1:]
    if linalg.rank_mod(S, 2) != k - 1:
        raise AssertionError("shortened code rank defect")
    return S


def punctured_rm_as_cyclic(c: int, m: int, include_zero_coset: bool = True) -> CyclicCode:
    """Cyclic code of length 2^m-1 whose generating set is a weight class.

    The generating set collects every exponent whose binary weight is at
    most c; the coset {0} is toggled by include_zero_coset.  With the
    flag on, dimension matches the punctured order-c code; with it off,
    the code drops to the shortened variant (one dimension less).
    """
    if m < 2 or m > MAX_M:
        raise ValueError(f"m must be in 2..{MAX_M}")
    if c < 1 or c > m:
        raise ValueError("weight threshold c must be in 1..m")
    n = 2**m - 1
    mask = 0
    for i in range(1, n):
        if i.bit_count() <= c:
            mask |= 1 << i
    if include_zero_coset:
        mask |= 1
    return CyclicCode(2, n, mask)


def star_identity_holds(r1: int, r2: int, m: int) -> bool:
    """Whether products of two RM codes span the expected higher order.

    Oracle: componentwise products of all generator-row pairs, compared
    against the target row space exactly.
    """
    if r1 + r2 > m:
        raise ValueError("orders must satisfy r1 + r2 <= m")
    if m > 6:
        raise ValueError("oracle budget is m <= 6")
    G1 = rm_generator_matrix(r1, m)
    G2 = rm_generator_matrix(r2, m)
    products = np.array([(g1 * g2) % 2 for g1 in G1 for g2 in G2], dtype=np.uint8)
    return linalg.row_space_equal(products, rm_generator_matrix(r1 + r2, m), 2)
