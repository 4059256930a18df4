"""Computer search for (storage, retrieval) pairs with good PIR trade-offs.

The search walks unions of cyclotomic cosets, pruning by dimension and
by the consecutive-run (BCH) bound of the dual retrieval code before
any distance enumeration: the run bound already certifies a privacy
floor, and candidates whose dual defining set lacks a long run are
dropped.  The top survivors get their dual distance refined exactly
when the enumeration budget allows, which can only raise the certified
privacy.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cyclic import CyclicCode, code_from_cosets, coset_representatives
from .distance import DEFAULT_BUDGET, DEFAULT_SEARCH_ITERS, min_distance


@dataclass(frozen=True)
class SearchSpec:
    n: int
    q: int = 2
    max_c_cosets: int = 2
    max_d_cosets: int = 5
    pool: tuple | None = None  # None means all representatives
    objective: str = "privacy"  # privacy | rate
    min_privacy: int | None = None
    min_rate: Fraction | None = None
    budget: int = DEFAULT_BUDGET
    search_iters: int = DEFAULT_SEARCH_ITERS
    d_complements: bool = False
    fixed_c: tuple | None = None  # coset reps pinning the storage code
    refine_top: int = 20
    max_results: int = 50
    time_budget_s: float | None = None

    def __post_init__(self):
        if self.objective not in ("privacy", "rate"):
            raise ValueError("objective must be 'privacy' or 'rate'")


@dataclass
class SearchHit:
    storage: CyclicCode
    retrieval: CyclicCode
    privacy_lo: int
    privacy_exact: bool
    rate: Fraction
    star_dim: int

    def sort_key(self, objective):
        lex = (self.storage.coset_reps(), self.retrieval.coset_reps())
        if objective == "rate":
            return (-self.rate, -self.privacy_lo, lex)
        return (-self.privacy_lo, -self.rate, lex)

    def to_json(self):
        n = self.storage.n
        return {
            "C": self.storage.spec_string(),
            "D": self.retrieval.spec_string(),
            "privacy_lo": self.privacy_lo,
            "privacy_exact": self.privacy_exact,
            "rate": f"{n - self.star_dim}/{n}",
            "star_dim": self.star_dim,
        }


@dataclass
class SearchResult:
    hits: list
    candidates_seen: int
    partial: bool = False


def _coset_unions(reps, max_cosets, n, q, complement=False):
    for size in range(1, max_cosets + 1):
        for combo in combinations(reps, size):
            yield combo, code_from_cosets(combo, n, q, complement=complement)


def search_pir_codes(spec: SearchSpec) -> SearchResult:
    """Enumerate candidate pairs, certify by run bound, refine the best.

    Privacy floors use the dual run bound, so every reported pair is
    certified: the true privacy can only be at least what is printed.
    """
    n, q = spec.n, spec.q
    reps = coset_representatives(n, q) if spec.pool is None else tuple(spec.pool)
    deadline = None if spec.time_budget_s is None else time.monotonic() + spec.time_budget_s
    partial = False

    if spec.fixed_c is not None:
        c_candidates = [code_from_cosets(spec.fixed_c, n, q)]
    else:
        c_candidates = [code for _, code in _coset_unions(reps, spec.max_c_cosets, n, q)]
        c_candidates = [c for c in c_candidates if 0 < c.dim < n]

    hits: list[SearchHit] = []
    seen = 0
    for _, D in _coset_unions(reps, spec.max_d_cosets, n, q, complement=spec.d_complements):
        seen += 1
        if deadline is not None and time.monotonic() > deadline:
            partial = True
            break
        if not 0 < D.dim < n:
            continue
        privacy_floor = D.dual().bch_bound() - 1
        if spec.min_privacy is not None and privacy_floor < spec.min_privacy:
            continue
        for C in c_candidates:
            star = C.star(D)
            if star.dim >= n:
                continue
            rate = Fraction(n - star.dim, n)
            if spec.min_rate is not None and rate < spec.min_rate:
                continue
            hits.append(SearchHit(C, D, privacy_floor, False, rate, star.dim))

    hits.sort(key=lambda h: h.sort_key(spec.objective))
    # exact refinement of the leading candidates, budget permitting
    refined: dict[int, tuple[int, bool]] = {}
    for hit in hits[: spec.refine_top]:
        D = hit.retrieval
        if D.mask not in refined:
            report = min_distance(D.dual(), budget=spec.budget, search_iters=spec.search_iters)
            if report.lower is not None and report.exact:
                refined[D.mask] = (report.lower - 1, True)
            elif report.lower is not None:
                refined[D.mask] = (max(hit.privacy_lo, report.lower - 1), False)
            else:
                refined[D.mask] = (n, True)
        lo, exact = refined[D.mask]
        hit.privacy_lo, hit.privacy_exact = lo, exact
    hits.sort(key=lambda h: h.sort_key(spec.objective))
    return SearchResult(hits[: spec.max_results], seen, partial)
