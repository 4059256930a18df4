"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s`.  The deep-budget
enumerations (2^29 words) appear in criteria 1 and 5; with the compiled
kernels the whole suite finishes in about a minute.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from cyclopir import linalg, protocol as proto
from cyclopir.cyclic import code_from_cosets, coset_representatives
from cyclopir.distance import (
    DEEP_BUDGET,
    macwilliams_transform,
    min_distance,
    random_minweight_search,
    weight_distribution_exhaustive,
)
from cyclopir.pir import evaluate_scheme
from cyclopir.reed_muller import (
    punctured_rm_as_cyclic,
    puncture_at_zero,
    rm_generator_matrix,
    rm_parameters,
    shorten_at_zero,
    star_identity_holds,
)
from cyclopir.search import SearchSpec, search_pir_codes
from cyclopir.tables import (
    BOUND_CONSISTENT,
    MATCH,
    REFERENCE_TABLES,
    expected_mismatches,
    reproduce_table,
)


@contextmanager
def criterion(num, desc):
    start = time.monotonic()
    try:
        yield
    except Exception:
        print(f"\nACCEPTANCE {num:2d} FAIL  {desc}")
        raise
    print(f"\nACCEPTANCE {num:2d} PASS  {desc}  ({time.monotonic() - start:.1f}s)")


def test_criterion_1_headline_row_exact_deep():
    with criterion(1, "length-127 headline row exact under the deep budget"):
        outcome = reproduce_table(1, deep=True, seed=1)
        row = outcome.rows[0]
        expected = {
            "C": (127, 8, 63),
            "D": (127, 29, 43),
            "Ddual": (127, 98, 10),
            "star": (127, 113, 5),
            "stardual": (127, 14, 56),
        }
        for col, (n, k, d) in expected.items():
            cell = row.cells[col]
            assert (cell.n, cell.k) == (n, k), (col, cell.n, cell.k)
            assert cell.report.exact and cell.report.lower == d, (col, cell.report)
            assert cell.dim_status == MATCH and cell.dist_status == MATCH
        assert row.privacy_exact and row.privacy_lo == 9 and row.privacy_status == MATCH
        assert row.rate == Fraction(14, 127) and row.rate_status == MATCH


def test_criterion_2_remaining_rows_default():
    with criterion(2, "length-127 table, remaining rows at the default budget"):
        outcome = reproduce_table(1, seed=1)
        table = REFERENCE_TABLES[1]
        # the ten storage/retrieval dimensions across all five rows
        for row in outcome.rows:
            assert row.cells["C"].dim_status == MATCH
            assert row.cells["D"].dim_status == MATCH
        dims_checked = sum(2 for _ in outcome.rows)
        assert dims_checked == 10
        for row, fixture in zip(outcome.rows, table.rows):
            for col, cell in row.cells.items():
                printed = fixture.printed.get(col)
                if printed is None or printed.d is None:
                    continue
                claimed = printed.d if isinstance(printed.d, int) else printed.d[1]
                # run bounds never exceed the recorded distances
                assert cell.bch <= claimed, (row.index, col, cell.bch, claimed)
                if min(cell.k, cell.n - cell.k) <= 26:
                    assert cell.report.exact, (row.index, col)
                    assert cell.dist_status == MATCH, (row.index, col)
                else:
                    assert cell.dist_status in (MATCH, BOUND_CONSISTENT), (row.index, col)
        assert outcome.mismatch_cells() == []


def test_criterion_3_length_63_example_exact():
    with criterion(3, "length-63 example: dimension-2 storage beats the RM pair 19 > 15"):
        C = code_from_cosets([21], 63, 2)
        rC = min_distance(C)
        assert rC.exact and (C.n, C.dim, rC.lower) == (63, 2, 42)
        D = code_from_cosets([5, 13], 63, 2, complement=True)
        assert D.dim == 51
        Ddual = D.dual()
        assert Ddual.dim == 12
        rDd = min_distance(Ddual)  # full 2^12 enumeration
        assert rDd.exact and rDd.method == "enumeration" and rDd.lower == 20
        scheme = evaluate_scheme(C, D)
        assert scheme.privacy_exact and scheme.privacy_lo == 19
        assert scheme.rate == Fraction(6, 63)

        C_rm = punctured_rm_as_cyclic(1, 6)
        D_rm = punctured_rm_as_cyclic(3, 6)
        assert (C_rm.dim, D_rm.dim) == (7, 42)
        assert C_rm.star(D_rm).mask == C.star(D).mask
        rm_scheme = evaluate_scheme(C_rm, D_rm)
        assert rm_scheme.privacy_exact and rm_scheme.privacy_lo == 15
        assert rm_scheme.rate == scheme.rate == Fraction(6, 63)
        assert scheme.privacy_lo > rm_scheme.privacy_lo


def test_criterion_4_length_31_worked_example():
    with criterion(4, "length-31 example: dimension 20, run bound 6, exact distance by enumeration"):
        code = code_from_cosets([0, 1, 3], 31, 2, complement=True)
        assert code.dim == 20
        assert code.bch_bound() == 6
        report = min_distance(code)  # 2^20 words through the dual route or direct
        assert report.exact and report.lower >= 6
        assert report.lower == 6  # observed exact value; the bound is met


def _constructed_min_words(r, m):
    """Explicit minimum-weight words for the punctured/shortened codes."""
    n = 2**m
    points = np.arange(n, dtype=np.uint32)
    cube = np.ones(n, dtype=np.uint8)  # product of (x_i + 1): first r coords zero
    mono = np.ones(n, dtype=np.uint8)  # product of x_i: first r coords one
    for i in range(r):
        bit = ((points >> i) & 1).astype(np.uint8)
        cube &= 1 - bit
        mono &= bit
    return cube, mono


def test_criterion_5_reed_muller_identities():
    with criterion(5, "Reed-Muller product identity, puncturing/shortening formulas, cyclic realization"):
        for m in range(1, 6):
            for r1 in range(0, m + 1):
                for r2 in range(0, m - r1 + 1):
                    assert star_identity_holds(r1, r2, m), (r1, r2, m)
        for m in range(2, 8):
            for r in range(1, m):
                n, k, d = rm_parameters(r, m)
                P = puncture_at_zero(r, m)
                assert P.shape == (k, n - 1)
                S = shorten_at_zero(r, m)
                assert S.shape == (k - 1, n - 1)
                for G, target in ((P, d - 1), (S, d)):
                    rows, cols = G.shape
                    if min(rows, cols - rows) <= 29:
                        rep = min_distance(G, budget=DEEP_BUDGET)
                        assert rep.exact and rep.lower == target, (r, m, target, rep)
                cube, mono = _constructed_min_words(r, m)
                punct_word, short_word = cube[1:], mono[1:]
                assert int(punct_word.sum()) == d - 1
                assert int(short_word.sum()) == d
                assert linalg.rank_mod(np.vstack([P, punct_word]), 2) == k
                assert linalg.rank_mod(np.vstack([S, short_word]), 2) == k - 1
                # cyclic realizations carry the matching run bounds
                assert punctured_rm_as_cyclic(r, m).bch_bound() == d - 1
                assert punctured_rm_as_cyclic(r, m, include_zero_coset=False).bch_bound() == d
        for m in range(3, 6):
            for c in range(1, m):
                cyc = punctured_rm_as_cyclic(c, m)
                mat = puncture_at_zero(c, m)
                assert cyc.dim == mat.shape[0]
                wd_cyc = min_distance(cyc).distribution
                wd_mat = min_distance(mat).distribution
                assert wd_cyc.counts == wd_mat.counts, (c, m)


def test_criterion_6_macwilliams_oracle_equivalence():
    with criterion(6, "MacWilliams transform agrees with direct dual enumeration on 200 random codes"):
        rng = np.random.default_rng(2024)
        # odd lengths up to 31 whose roots of unity fit the pinned field table
        lengths = [5, 7, 9, 11, 13, 15, 17, 21, 23, 31]
        done = 0
        while done < 200:
            n = int(rng.choice(lengths))
            reps = coset_representatives(n, 2)
            chosen = [r for r in reps if rng.random() < 0.5]
            code = code_from_cosets(chosen, n, 2)
            if max(code.dim, n - code.dim) > 20:
                continue
            done += 1
            wd = weight_distribution_exhaustive(code.generator_matrix())
            via_transform = macwilliams_transform(wd, code.dim, 2)
            direct = weight_distribution_exhaustive(code.dual().generator_matrix())
            assert via_transform.counts == direct.counts
            assert macwilliams_transform(via_transform, n - code.dim, 2).counts == wd.counts


def _retrieval_with_round_checks(db, C, D, file_index, seed):
    """Protocol oracle: full retrieval re-implemented with per-round checks."""
    q = C.q
    storage = proto.encode_storage(db, C)
    session = proto.plan_rounds(C, D, seed)
    Hstar = C.star(D).dual().generator_matrix().astype(np.int64)
    G_C = C.generator_matrix()
    k = C.dim
    rho = db.rows_per_file
    num_rows = db.data.shape[0]
    out = np.zeros((rho, k), dtype=np.uint8)
    counter = 0
    for local in range(rho):
        target = (file_index - 1) * rho + local
        got = {}
        decoded = False
        while not decoded:
            for S in session.schedule:
                messages = proto.round_messages(session, num_rows, counter)
                counter += 1
                Q = proto.make_queries(session, target, S, messages)
                responses = proto.collect_responses(storage, Q)
                # response minus the masked target row must lie in C*D
                mask = np.zeros(C.n, dtype=np.int64)
                for col in S:
                    mask[col] = storage.Y[target, col]
                residual = (responses.astype(np.int64) - mask) % q
                assert not np.any((Hstar @ residual) % q), "round decomposition violated"
                got.update(proto.reconstruct(session.H, S, responses, q))
                cols = sorted(got)
                R, pivots = linalg.rref_mod(G_C[:, cols], q)
                if len(pivots) == k:
                    info = [cols[p] for p in pivots]
                    y = np.array([got[c] for c in info], dtype=np.int64)
                    out[local] = linalg.solve_mod(G_C[:, info].T, y, q)
                    decoded = True
                    break
    return out


def test_criterion_7_protocol_correctness():
    with criterion(7, "end-to-end retrieval exact at lengths 7 and 63, 100 seeds each"):
        C7 = code_from_cosets([0], 7, 2)
        D7 = code_from_cosets([0, 1, 2, 4], 7, 2)
        db7 = proto.random_database(2, 1, C7.dim, 2, seed=99)
        for index in (1, 2):
            for seed in range(100):
                got = _retrieval_with_round_checks(db7, C7, D7, index, seed)
                assert np.array_equal(got, db7.file(index))
        C63 = code_from_cosets([21], 63, 2)
        D63 = code_from_cosets([5, 13], 63, 2, complement=True)
        db63 = proto.random_database(2, 1, C63.dim, 2, seed=100)
        for index in (1, 2):
            for seed in range(100):
                got = _retrieval_with_round_checks(db63, C63, D63, index, seed)
                assert np.array_equal(got, db63.file(index))
        # the public entry point agrees and accounts the nominal rate exactly
        out, acct = proto.run_full_retrieval(db63, C63, D63, 1, seed=0)
        assert np.array_equal(out, db63.file(1))
        assert acct["nominal_rate"] == Fraction(6, 63)


def test_criterion_8_protocol_privacy():
    with criterion(8, "privacy: exhaustive rank checks, identical query views, sampled length-127 check"):
        D7 = code_from_cosets([0, 1, 2, 4], 7, 2)
        v3 = proto.privacy_check(D7, 3, mode="exhaustive")
        assert v3.ok and v3.checked == 35
        v4 = proto.privacy_check(D7, 4, mode="exhaustive")
        assert not v4.ok and v4.witness is not None
        assert linalg.rank_mod(D7.generator_matrix()[:, list(v4.witness)], 2) < 4

        C7 = code_from_cosets([0], 7, 2)
        S0 = proto.plan_rounds(C7, D7).schedule[0]
        for T in combinations(range(7), 3):
            views0 = proto.exhaustive_query_views(D7, 2, T, S0, 0)
            views1 = proto.exhaustive_query_views(D7, 2, T, S0, 1)
            assert views0 == views1, T

        D127 = code_from_cosets([0, 5, 23, 27, 31], 127, 2)
        verdict = proto.privacy_check(D127, 9, mode="sampled", trials=10**4, seed=5)
        assert verdict.ok and verdict.checked == 10**4


def test_criterion_9_shortened_rm_comparison():
    with criterion(9, "length-127 comparison: 15 vs 14 at 29/127 and 7 vs 6 at 64/127"):
        outcome = reproduce_table(7, search_iters=2500, seed=1)
        rows = {r.index: r for r in outcome.rows}
        # cyclic pair beats the shortened-RM pair at rate 64/127: 7 vs 6, both exact
        assert rows[2].privacy_exact and rows[2].privacy_lo == 7 and rows[2].privacy_status == MATCH
        assert rows[3].privacy_exact and rows[3].privacy_lo == 6 and rows[3].privacy_status == MATCH
        assert rows[2].rate == rows[3].rate == Fraction(64, 127)
        # and at rate 29/127: 15 vs 14; the shortened-RM side is exact,
        # the cyclic rows carry certified intervals containing 15
        assert rows[6].privacy_exact and rows[6].privacy_lo == 14 and rows[6].privacy_status == MATCH
        for idx in (4, 5):
            row = rows[idx]
            assert row.rate == Fraction(29, 127)
            assert row.privacy_lo <= 15 <= row.privacy_hi
            assert row.privacy_status in (MATCH, BOUND_CONSISTENT)
        assert rows[4].rate == rows[5].rate == rows[6].rate
        # only the two recorded errata mismatch
        assert set(outcome.mismatch_cells()) == expected_mismatches(7)


def test_criterion_10_search_rediscovery_and_dim2_storage_table():
    with criterion(10, "search rediscovers a (privacy 9+, rate 14/127+) pair; dim-2 storage table bound-consistent"):
        start = time.monotonic()
        spec = SearchSpec(
            n=127,
            max_c_cosets=2,
            max_d_cosets=5,
            min_privacy=9,
            min_rate=Fraction(14, 127),
            max_results=5,
        )
        result = search_pir_codes(spec)
        assert time.monotonic() - start < 600
        assert result.hits and not result.partial
        for hit in result.hits:
            assert hit.privacy_lo >= 9
            assert hit.rate >= Fraction(14, 127)

        outcome = reproduce_table(4, search_iters=1200, seed=1)
        table = REFERENCE_TABLES[4]
        for row, fixture in zip(outcome.rows, table.rows):
            assert row.privacy_status == BOUND_CONSISTENT, row.index
            printed = fixture.printed["Ddual"].d
            assert printed[0] == "run+"
            # our run bound reproduces the recorded one exactly
            assert row.cells["Ddual"].bch == printed[1], (row.index, row.cells["Ddual"].bch)
        assert set(outcome.mismatch_cells()) == expected_mismatches(4)
