"""Minimum distance and weight distributions.

Three routes, tried in order of certainty:

  1. exact census of all q^k codewords (Gray-code kernel for q=2),
  2. exact census of the dual plus a MacWilliams transform,
  3. a lower bound (BCH for cyclic inputs) paired with a randomized
     information-set upper bound.

Budgets are counted in enumerated words.  The default keeps runs at
seconds; the deep budget (2^29) unlocks the largest exactly-checkable
reference cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import kernels, linalg
from .cyclic import CyclicCode

DEFAULT_BUDGET = 1 << 26
DEEP_BUDGET = 1 << 29
HARD_CAP = 1 << 30
DEFAULT_SEARCH_ITERS = 1200
GENERIC_Q_CAP = 1 << 22


class BudgetError(RuntimeError):
    pass


@dataclass
class WeightDistribution:
    """Exact codeword-weight census A_0..A_n (python ints, arbitrary size)."""

    n: int
    counts: list
    source: str  # enumeration | macwilliams | partial

    def min_distance(self):
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def total(self) -> int:
        return sum(self.counts)

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("counts must have length n+1")
        if self.source != "partial" and self.counts[0] != 1:
            raise AssertionError("A_0 must be 1 for a linear code")


def _reduced_basis(G, q: int) -> np.ndarray:
    R, pivots = linalg.rref_mod(G, q)
    return R[: len(pivots)].astype(np.uint8)


def weight_distribution_exhaustive(G, q: int = 2, budget: int = DEFAULT_BUDGET, start=None) -> WeightDistribution:
    """Exact weight distribution by enumerating all q^k codewords."""
    G = np.atleast_2d(np.asarray(G, dtype=np.uint8))
    n = G.shape[1]
    B = _reduced_basis(G, q)
    k = B.shape[0]
    budget = min(budget, HARD_CAP)
    if q**k > budget:
        raise BudgetError(
            f"{q}^{k} codewords exceed the budget {budget}; "
            f"enumerate the dual ({q}^{n - k} words) and apply the MacWilliams transform"
        )
    if q == 2:
        packed = linalg.pack_rows(B)
        start_packed = None
        if start is not None:
            start_packed = linalg.pack_rows(np.atleast_2d(start))[0]
        counts = kernels.weight_census(packed, n, start_packed)
        source = "enumeration" if start is None else "partial"
        return WeightDistribution(n, [int(c) for c in counts], source)
    return _census_generic(B, n, q, start)


def _census_generic(B, n, q, start=None):
    k = B.shape[0]
    if q**k > GENERIC_Q_CAP:
        raise BudgetError(f"generic q={q} census capped at {GENERIC_Q_CAP} words")
    words = np.zeros((1, n), dtype=np.int64)
    if start is not None:
        words[0] = np.asarray(start, dtype=np.int64) % q
    for row in B:
        words = np.concatenate([(words + t * row.astype(np.int64)) % q for t in range(q)])
    weights = np.count_nonzero(words, axis=1)
    counts = np.bincount(weights, minlength=n + 1)
    source = "enumeration" if start is None else "partial"
    return WeightDistribution(n, [int(c) for c in counts], source)


def macwilliams_transform(wd: WeightDistribution, k: int, q: int = 2) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams identity, exactly.

    Computed as q^-k * W(x+(q-1)y, x-y) with integer coefficients; any
    non-integer or negative output signals an upstream bug.
    """
    if wd.source == "partial":
        raise ValueError("transform needs an exact distribution")
    n = wd.n
    size = q**k
    if wd.total() != size:
        raise ValueError(f"distribution sums to {wd.total()}, expected {q}^{k}")
    # basis polynomial B_i(z) = (1+(q-1)z)^(n-i) * (1-z)^i, updated incrementally
    B = [comb(n, j) * (q - 1) ** j for j in range(n + 1)]
    acc = [0] * (n + 1)
    c = q - 1
    for i in range(n + 1):
        a = wd.counts[i]
        if a:
            for j in range(n + 1):
                acc[j] += a * B[j]
        if i < n:
            # multiply by (1-z) then divide by (1+(q-1)z); both exact
            C = [B[0]] + [B[j] - B[j - 1] for j in range(1, n + 1)] + [-B[n]]
            D = [0] * (n + 1)
            D[0] = C[0]
            for j in range(1, n + 1):
                D[j] = C[j] - c * D[j - 1]
            if C[n + 1] - c * D[n] != 0:
                raise AssertionError("inexact division in MacWilliams basis update")
            B = D
    out = []
    for j in range(n + 1):
        val, rem = divmod(acc[j], size)
        if rem != 0 or val < 0:
            raise AssertionError(f"MacWilliams output A'_{j} = {acc[j]}/{size} is not a non-negative integer")
        out.append(val)
    return WeightDistribution(n, out, "macwilliams")


def random_minweight_search(G, iterations: int = DEFAULT_SEARCH_ITERS, seed: int = 1, stop_at: int = 0):
    """Upper bound on the minimum weight; None when the code is {0}."""
    G = np.atleast_2d(np.asarray(G, dtype=np.uint8))
    B = _reduced_basis(G, 2)
    if B.shape[0] == 0:
        return None
    best = kernels.lowweight_search(linalg.pack_rows(B), G.shape[1], iterations, seed, stop_at)
    return None if best < 0 else int(best)


@dataclass
class DistanceReport:
    """Certified bracket [lower, upper] for the minimum distance."""

    n: int
    k: int
    lower: int | None
    upper: int | None
    exact: bool
    method: str
    budget: int
    seed: int | None = None
    distribution: WeightDistribution | None = field(default=None, repr=False)

    @property
    def distance(self):
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        return {
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "budget": self.budget,
            "seed": self.seed,
        }


def _exact_report(n, k, q, G_primal, G_dual, budget, prefer_dual):
    if prefer_dual:
        wd_dual = weight_distribution_exhaustive(G_dual(), q, budget)
        wd = macwilliams_transform(wd_dual, n - k, q)
        method = "macwilliams"
    else:
        wd = weight_distribution_exhaustive(G_primal(), q, budget)
        method = "enumeration"
    d = wd.min_distance()
    return d, method, wd


def min_distance(code, budget: int = DEFAULT_BUDGET, search_iters: int = DEFAULT_SEARCH_ITERS, seed: int = 1, q: int | None = None) -> DistanceReport:
    """Distance ladder: exact census, dual census + transform, or bounds.

    Accepts a CyclicCode or a generator matrix (with q for the latter,
    default 2).  Bound reports use the BCH bound for cyclic inputs and a
    randomized information-set search for the upper end; lower == upper
    upgrades the report to exact.
    """
    budget = min(budget, HARD_CAP)
    if isinstance(code, CyclicCode):
        n, k, q = code.n, code.dim, code.q
        bch = code.bch_bound()
        G_primal = code.generator_matrix
        G_dual = code.dual().generator_matrix
        G_search = G_primal
    else:
        q = 2 if q is None else q
        G = _reduced_basis(np.atleast_2d(np.asarray(code, dtype=np.uint8)), q)
        n, k = G.shape[1], G.shape[0]
        bch = 1
        G_primal = lambda: G
        G_dual = lambda: linalg.nullspace_mod(G, q)
        G_search = G_primal

    if k == 0:
        return DistanceReport(n, 0, None, None, True, "degenerate", budget)

    primal_cost = q**k
    dual_cost = q ** (n - k)
    if min(primal_cost, dual_cost) <= budget:
        prefer_dual = dual_cost < primal_cost
        d, method, wd = _exact_report(n, k, q, G_primal, G_dual, budget, prefer_dual)
        return DistanceReport(n, k, d, d, True, method, budget, distribution=wd)

    lower = max(1, bch)
    upper = n
    if q == 2:
        found = random_minweight_search(G_search(), search_iters, seed, stop_at=lower)
        if found is not None:
            upper = found
    if upper < lower:
        raise AssertionError(f"search found weight {upper} below the certified lower bound {lower}")
    return DistanceReport(n, k, lower, upper, lower == upper, "bound", budget, seed=seed)
