"""Executable PIR protocol on a simulated distributed storage system.

One code coordinate per server.  Storage: the stacked file matrix A is
encoded row-wise as Y = A G_C, server j holding column j.  Retrieval of
a row proceeds in rounds: the user samples one uniform retrieval-code
word per stored row, adds a unit spike at the target row on the servers
of an information set S of (C*D)^perp, and each server returns the
inner product of its query with its column.  The retrieval-code part of
the response lies in C*D, so applying the dual generator H leaves an
invertible u x u system H|_S x = H r whose solution is the target row
restricted to S.  Cyclic shifts of S eventually cover an information
set of C and the row is decoded.

Servers are stateless in-process actors: they see their query vector,
never the target index or the embedding set.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from . import linalg
from .cyclic import CyclicCode


@dataclass
class Database:
    """r files of rho rows by k columns over GF(q), stacked into one matrix."""

    q: int
    num_files: int
    rows_per_file: int
    row_width: int
    data: np.ndarray

    def __post_init__(self):
        expected = (self.num_files * self.rows_per_file, self.row_width)
        self.data = np.asarray(self.data, dtype=np.uint8) % self.q
        if self.data.shape != expected:
            raise ValueError(f"database shape {self.data.shape} != {expected}")
        if min(self.num_files, self.rows_per_file, self.row_width) < 1:
            raise ValueError("database dimensions must be positive")

    def file(self, index: int) -> np.ndarray:
        """File contents, 1-based index."""
        if not 1 <= index <= self.num_files:
            raise IndexError(f"file index {index} outside 1..{self.num_files}")
        lo = (index - 1) * self.rows_per_file
        return self.data[lo : lo + self.rows_per_file]


def random_database(num_files: int, rows_per_file: int, row_width: int, q: int = 2, seed: int = 0) -> Database:
    rng = np.random.default_rng(seed)
    data = rng.integers(0, q, size=(num_files * rows_per_file, row_width), dtype=np.int64)
    return Database(q, num_files, rows_per_file, row_width, data.astype(np.uint8))


@dataclass
class StorageState:
    code: CyclicCode
    Y: np.ndarray  # (rho * r, n); row m is the encoding of database row m

    def column(self, j: int) -> np.ndarray:
        return self.Y[:, j]


def encode_storage(db: Database, C: CyclicCode) -> StorageState:
    """Y = A G_C; every row of Y is a storage-code word."""
    if db.row_width != C.dim:
        raise ValueError(f"database rows have {db.row_width} symbols, storage code wants {C.dim}")
    if db.q != C.q:
        raise ValueError("database and storage alphabets differ")
    G = C.generator_matrix()
    Y = (db.data.astype(np.int64) @ G.astype(np.int64)) % C.q
    return StorageState(C, Y.astype(np.uint8))


@dataclass
class RetrievalSession:
    """User-side state: codes, dual-product generator, and round schedule."""

    storage: CyclicCode
    retrieval: CyclicCode
    H: np.ndarray  # generator of (C*D)^perp, u x n
    G_D: np.ndarray  # generator of the retrieval code, reused every round
    schedule: list  # information sets of (C*D)^perp; shifts of schedule[0]
    seed: int = 0
    rounds_used: int = field(default=0, init=False)

    @property
    def n(self) -> int:
        return self.storage.n

    @property
    def q(self) -> int:
        return self.storage.q

    @property
    def per_round(self) -> int:
        return self.H.shape[0]


def plan_rounds(C: CyclicCode, D: CyclicCode, seed: int = 0) -> RetrievalSession:
    """Pivot information set of (C*D)^perp plus greedy cyclic shifts.

    Shifting an information set of a cyclic code gives another one, so
    the schedule stays valid while the union grows to all coordinates.
    """
    star = C.star(D)
    stardual = star.dual()
    u = stardual.dim
    if u == 0:
        raise ValueError("star product fills the space; the scheme retrieves nothing")
    n = C.n
    H = stardual.generator_matrix()
    _, pivots = linalg.rref_mod(H, C.q)
    S0 = tuple(sorted(pivots))
    covered = set(S0)
    schedule = [S0]
    while len(covered) < n:
        best_shift, best_gain = None, -1
        for s in range(1, n):
            gain = sum(1 for c in S0 if (c + s) % n not in covered)
            if gain > best_gain:
                best_shift, best_gain = s, gain
        S = tuple(sorted((c + best_shift) % n for c in S0))
        if linalg.rank_mod(H[:, S], C.q) != u:
            raise AssertionError("shifted set lost the information-set property")
        schedule.append(S)
        covered.update(S)
    return RetrievalSession(C, D, H, D.generator_matrix(), schedule, seed)


def round_messages(session: RetrievalSession, num_rows: int, round_counter: int) -> np.ndarray:
    """Fresh per-round retrieval-code messages, counter-keyed for replay."""
    rng = np.random.default_rng((session.seed, round_counter))
    return rng.integers(0, session.q, size=(num_rows, session.retrieval.dim), dtype=np.int64).astype(np.uint8)


def make_queries(session: RetrievalSession, target_row: int, S, messages: np.ndarray) -> np.ndarray:
    """Per-server query vectors; rows indexed by server, columns by stored row.

    Query j is the j-th coordinate of one retrieval codeword per stored
    row, plus a unit at the target row exactly for servers in S.
    """
    codewords = (messages.astype(np.int64) @ session.G_D.astype(np.int64)) % session.q
    Q = codewords.T.copy()  # (n, num_rows)
    Q[list(S), target_row] = (Q[list(S), target_row] + 1) % session.q
    return Q.astype(np.uint8)


def server_respond(query: np.ndarray, column: np.ndarray, q: int) -> int:
    """Inner product of the query with the server's stored column."""
    if query.shape != column.shape:
        raise ValueError("query/column length mismatch")
    return int(np.dot(query.astype(np.int64), column.astype(np.int64)) % q)


def collect_responses(storage: StorageState, Q: np.ndarray) -> np.ndarray:
    n = storage.Y.shape[1]
    return np.array([server_respond(Q[j], storage.column(j), storage.code.q) for j in range(n)], dtype=np.uint8)


def reconstruct(H: np.ndarray, S, responses: np.ndarray, q: int) -> dict:
    """Solve H|_S x = H r for the masked row's values on S."""
    S = sorted(S)
    if not S:
        return {}
    rhs = (H.astype(np.int64) @ responses.astype(np.int64)) % q
    x = linalg.solve_mod(H[:, S], rhs, q)
    return {col: int(v) for col, v in zip(S, x)}


def run_full_retrieval(db: Database, C: CyclicCode, D: CyclicCode, file_index: int, seed: int = 0, transcript: list | None = None):
    """Retrieve one file end to end; returns (file matrix, accounting dict).

    Per target row, rounds walk the schedule until the recovered columns
    contain an information set of C, then the row solves exactly.
    """
    storage = encode_storage(db, C)
    session = plan_rounds(C, D, seed)
    q, n, k = session.q, session.n, C.dim
    G_C = C.generator_matrix()
    num_rows = db.data.shape[0]
    rho = db.rows_per_file
    out = np.zeros((rho, k), dtype=np.uint8)
    round_counter = 0
    for local in range(rho):
        target = (file_index - 1) * rho + local
        got: dict[int, int] = {}
        decoded = False
        while not decoded:
            for S in session.schedule:
                messages = round_messages(session, num_rows, round_counter)
                Q = make_queries(session, target, S, messages)
                responses = collect_responses(storage, Q)
                values = reconstruct(session.H, S, responses, q)
                for col, v in values.items():
                    if col in got and got[col] != v:
                        raise AssertionError("inconsistent recovery across overlapping rounds")
                    got[col] = v
                round_counter += 1
                if transcript is not None:
                    digest = hashlib.sha256(Q.tobytes()).hexdigest()
                    transcript.append(
                        {
                            "round": round_counter - 1,
                            "S": list(S),
                            "queries_digest": digest,
                            "responses": responses.tolist(),
                            "recovered": {str(c): v for c, v in sorted(values.items())},
                        }
                    )
                cols = sorted(got)
                sub = G_C[:, cols]
                R, pivots = linalg.rref_mod(sub, q)
                if len(pivots) == k:
                    info_cols = [cols[p] for p in pivots]
                    A = G_C[:, info_cols]
                    y = np.array([got[c] for c in info_cols], dtype=np.int64)
                    out[local] = linalg.solve_mod(A.T, y, q)
                    decoded = True
                    break
    session.rounds_used = round_counter
    downloads = n * round_counter
    accounting = {
        "rounds": round_counter,
        "downloads": downloads,
        "uploads": n * num_rows * round_counter,
        "nominal_rate": Fraction(session.per_round, n),
        "effective_rate": Fraction(rho * k, downloads),
    }
    return out, accounting


def write_transcript(path: str, transcript: list):
    with open(path, "w") as fh:
        for entry in transcript:
            fh.write(json.dumps(entry) + "\n")


# ---------------------------------------------------------------------------
# Privacy verification
# ---------------------------------------------------------------------------

@dataclass
class PrivacyVerdict:
    ok: bool
    t: int
    mode: str
    checked: int
    witness: tuple | None = None


def _packed_columns(G: np.ndarray) -> list[int]:
    k, n = G.shape
    cols = []
    for j in range(n):
        v = 0
        for i in range(k):
            if G[i, j]:
                v |= 1 << i
        cols.append(v)
    return cols


def _subset_full_rank_gf2(cols: list[int], subset) -> bool:
    pivots: dict[int, int] = {}
    for j in subset:
        v = cols[j]
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
        if v == 0:
            return False
    return True


def privacy_check(D: CyclicCode, t: int, mode: str = "auto", trials: int = 10000, seed: int = 0) -> PrivacyVerdict:
    """Verify that any t servers see jointly uniform queries.

    Exact algebraic criterion: every t-subset of columns of G_D has rank
    t (equivalent to d(D^perp) > t).  Exhaustive over all subsets when
    that count is at most 10^6, otherwise uniformly sampled.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    n = D.n
    if t == 0:
        return PrivacyVerdict(True, 0, "exhaustive", 0)
    if t > n:
        raise ValueError("t cannot exceed the number of servers")
    G = D.generator_matrix()
    if D.q == 2:
        cols = _packed_columns(G)
        full_rank = lambda subset: _subset_full_rank_gf2(cols, subset)
    else:
        full_rank = lambda subset: linalg.rank_mod(G[:, list(subset)], D.q) == t

    from math import comb

    total = comb(n, t)
    exhaustive = mode == "exhaustive" or (mode == "auto" and total <= 10**6)
    if mode == "exhaustive" and total > 10**7:
        raise ValueError(f"exhaustive check over {total} subsets refused")
    checked = 0
    if exhaustive:
        for subset in combinations(range(n), t):
            checked += 1
            if not full_rank(subset):
                return PrivacyVerdict(False, t, "exhaustive", checked, subset)
        return PrivacyVerdict(True, t, "exhaustive", checked)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        subset = tuple(sorted(rng.choice(n, size=t, replace=False).tolist()))
        checked += 1
        if not full_rank(subset):
            return PrivacyVerdict(False, t, "sampled", checked, subset)
    return PrivacyVerdict(True, t, "sampled", checked)


def exhaustive_query_views(D: CyclicCode, num_rows: int, servers, S, target_row: int):
    """Multiset of query views on the given servers over all randomness.

    Enumerates every choice of one retrieval codeword per stored row, so
    the returned counter is the exact distribution (scaled by its total)
    of what the chosen servers observe jointly.
    """
    from collections import Counter

    G_D = D.generator_matrix()
    k = G_D.shape[0]
    q = D.q
    words = []
    for msg in product(range(q), repeat=k):
        words.append((np.array(msg, dtype=np.int64) @ G_D.astype(np.int64)) % q)
    views: Counter = Counter()
    S = set(S)
    for combo in product(words, repeat=num_rows):
        view = []
        for j in servers:
            qv = [int(combo[m][j]) for m in range(num_rows)]
            if j in S:
                qv[target_row] = (qv[target_row] + 1) % q
            view.append(tuple(qv))
        views[tuple(view)] += 1
    return views
