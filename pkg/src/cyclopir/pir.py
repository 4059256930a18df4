"""PIR scheme parameters from a (storage, retrieval) code pair.

For cyclic codes the automorphism group is transitive, so a pair (C, D)
yields a scheme downloading n symbols per round, recovering
dim((C*D)^perp) of them, and resisting collusion by up to
d(D^perp) - 1 servers.  Rates are exact rationals throughout; privacy
is reported as an interval whenever the dual distance is not certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclic import CyclicCode
from .distance import DEFAULT_BUDGET, DEFAULT_SEARCH_ITERS, DistanceReport, min_distance


class SchemeError(ValueError):
    pass


@dataclass
class PirParameters:
    n: int
    q: int
    storage: CyclicCode
    retrieval: CyclicCode
    star: CyclicCode
    retrieved_per_round: int
    rate: Fraction
    privacy_lo: int
    privacy_hi: int
    privacy_exact: bool
    reports: dict

    @property
    def privacy(self):
        return self.privacy_lo if self.privacy_exact else None

    def to_json(self) -> dict:
        def cell(code: CyclicCode, key: str):
            entry = [code.n, code.dim]
            rep = self.reports.get(key)
            return {"params": entry, "distance": rep.to_json() if rep else None}

        return {
            "C": cell(self.storage, "C"),
            "D": cell(self.retrieval, "D"),
            "Ddual": cell(self.retrieval.dual(), "Ddual"),
            "star": cell(self.star, "star"),
            "stardual": cell(self.star.dual(), "stardual"),
            "privacy": {"lo": self.privacy_lo, "hi": self.privacy_hi, "exact": self.privacy_exact},
            "rate": f"{self.retrieved_per_round}/{self.n}",
        }


def evaluate_scheme(
    C: CyclicCode,
    D: CyclicCode,
    budget: int = DEFAULT_BUDGET,
    search_iters: int = DEFAULT_SEARCH_ITERS,
    seed: int = 1,
    full_reports: bool = False,
) -> PirParameters:
    """Parameters of the scheme built on storage C and retrieval D."""
    if (C.n, C.q) != (D.n, D.q):
        raise SchemeError("storage and retrieval codes must share (n, q)")
    star = C.star(D)
    n = C.n
    if star.dim == n:
        raise SchemeError("star product fills the space; nothing is retrievable")
    u = n - star.dim
    ddual = D.dual()
    report = min_distance(ddual, budget=budget, search_iters=search_iters, seed=seed)
    if report.lower is None:
        # retrieval code is the whole space: queries are fully random
        lo = hi = n
        exact = True
    else:
        lo, hi, exact = report.lower - 1, report.upper - 1, report.exact
    reports = {"Ddual": report}
    if full_reports:
        reports["C"] = min_distance(C, budget=budget, search_iters=search_iters, seed=seed)
        reports["D"] = min_distance(D, budget=budget, search_iters=search_iters, seed=seed)
        reports["star"] = min_distance(star, budget=budget, search_iters=search_iters, seed=seed)
        reports["stardual"] = min_distance(star.dual(), budget=budget, search_iters=search_iters, seed=seed)
    return PirParameters(
        n=n,
        q=C.q,
        storage=C,
        retrieval=D,
        star=star,
        retrieved_per_round=u,
        rate=Fraction(u, n),
        privacy_lo=lo,
        privacy_hi=hi,
        privacy_exact=exact,
        reports=reports,
    )


def compare_schemes(pairs, budget: int = DEFAULT_BUDGET, search_iters: int = DEFAULT_SEARCH_ITERS, seed: int = 1):
    """Rank evaluated (C, D) pairs by privacy then rate, flagging Pareto rows.

    Ties keep input order; privacy sorts on its certified lower bound.
    Returns a list of (params, pareto_flag).
    """
    evaluated = []
    for C, D in pairs:
        if evaluated and (C.n, C.q) != (evaluated[0][1].n, evaluated[0][1].q):
            raise SchemeError("all pairs must share the same (n, q)")
        evaluated.append((len(evaluated), evaluate_scheme(C, D, budget, search_iters, seed)))
    ordered = sorted(evaluated, key=lambda e: (-e[1].privacy_lo, -e[1].rate, e[0]))
    out = []
    for idx, params in ordered:
        dominated = any(
            (o.privacy_lo >= params.privacy_lo and o.rate >= params.rate)
            and (o.privacy_lo > params.privacy_lo or o.rate > params.rate)
            for _, o in ordered
        )
        out.append((params, not dominated))
    return out
