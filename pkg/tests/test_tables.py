from fractions import Fraction

import pytest

from cyclopir.cyclic import code_from_cosets
from cyclopir.distance import DistanceReport
from cyclopir.tables import (
    BOUND_CONSISTENT,
    COLUMNS,
    MATCH,
    MISMATCH,
    REFERENCE_TABLES,
    classify_distance,
    classify_privacy,
    expected_mismatches,
    reproduce_table,
)


def test_fixture_dimensions_rebuild():
    # every recorded dimension is reproduced by its coset data, except the
    # cells annotated as errata
    for table_id, table in REFERENCE_TABLES.items():
        errata = expected_mismatches(table_id)
        for idx, row in enumerate(table.rows, start=1):
            C = code_from_cosets(row.c_reps, table.n, table.q, complement=row.c_complement)
            D = code_from_cosets(row.d_reps, table.n, table.q, complement=row.d_complement)
            star = C.star(D)
            computed = {
                "C": C.dim,
                "D": D.dim,
                "Ddual": D.dual().dim,
                "star": star.dim,
                "stardual": star.dual().dim,
            }
            for col, printed in row.printed.items():
                if (idx, col) in errata:
                    continue
                assert computed[col] == printed.k, (table_id, idx, col)
            if (idx, "rate") not in errata:
                assert Fraction(table.n - star.dim, table.n) == row.rate, (table_id, idx)


def _rep(lower, upper, exact, n=127, k=10):
    return DistanceReport(n, k, lower, upper, exact, "bound", 1 << 26)


def test_classify_distance_rules():
    assert classify_distance(None, _rep(3, 3, True)) is None
    assert classify_distance(5, _rep(5, 5, True)) == MATCH
    assert classify_distance(5, _rep(6, 6, True)) == MISMATCH
    assert classify_distance(5, _rep(3, 9, False)) == BOUND_CONSISTENT
    assert classify_distance(5, _rep(6, 9, False)) == MISMATCH
    assert classify_distance((">=", 5), _rep(7, 7, True)) == BOUND_CONSISTENT
    assert classify_distance((">=", 5), _rep(4, 4, True)) == MISMATCH
    assert classify_distance((">=", 5), _rep(2, 8, False)) == BOUND_CONSISTENT
    assert classify_distance((">=", 5), _rep(2, 4, False)) == MISMATCH
    assert classify_distance(("run+", 20, 45), _rep(20, 65, False)) == BOUND_CONSISTENT
    assert classify_distance(("run+", 20, 45), _rep(65, 65, True)) == MATCH


def test_classify_privacy_rules():
    assert classify_privacy(9, 9, 9, True) == MATCH
    assert classify_privacy(9, 8, 8, True) == MISMATCH
    assert classify_privacy(9, 3, 9, False) == BOUND_CONSISTENT
    assert classify_privacy(9, 3, 8, False) == MISMATCH
    assert classify_privacy((">=", 7), 7, 7, True) == BOUND_CONSISTENT
    assert classify_privacy((">=", 7), 3, 6, False) == MISMATCH


def test_unknown_table_rejected():
    with pytest.raises(KeyError):
        reproduce_table(2)


def test_reproduce_table_1_default_no_mismatch():
    outcome = reproduce_table(1, search_iters=400, seed=3)
    assert outcome.mismatch_cells() == []
    counts = outcome.status_counts()
    assert counts[MISMATCH] == 0
    assert counts[MATCH] > 0
    payload = outcome.to_json()
    assert payload["table"] == 1 and len(payload["rows"]) == 5
    for row in payload["rows"]:
        assert set(row["cells"]) == set(COLUMNS)


def test_reproduce_table_7_expected_mismatches():
    outcome = reproduce_table(7, search_iters=2500, seed=3)
    assert set(outcome.mismatch_cells()) == expected_mismatches(7)
