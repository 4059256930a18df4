from fractions import Fraction

from cyclopir.cyclic import code_from_cosets, coset_representatives
from cyclopir.search import SearchSpec, search_pir_codes


def test_empty_pool_empty_result():
    res = search_pir_codes(SearchSpec(n=31, pool=()))
    assert res.hits == [] and res.candidates_seen == 0


def test_small_search_deterministic():
    spec = SearchSpec(n=31, max_c_cosets=1, max_d_cosets=2, min_privacy=2, max_results=5)
    a = search_pir_codes(spec)
    b = search_pir_codes(spec)
    assert [h.to_json() for h in a.hits] == [h.to_json() for h in b.hits]
    assert a.hits, "expected at least one certified pair at n=31"
    for h in a.hits:
        assert h.privacy_lo >= 2
        assert 0 < h.star_dim < 31


def test_certified_floor_never_above_exact():
    # refined results keep the floor property: certified <= true privacy
    spec = SearchSpec(n=31, max_c_cosets=1, max_d_cosets=2, min_privacy=2, max_results=3)
    from cyclopir.distance import min_distance

    for hit in search_pir_codes(spec).hits:
        r = min_distance(hit.retrieval.dual())
        assert r.exact
        true_privacy = r.lower - 1
        assert hit.privacy_lo <= true_privacy
        if hit.privacy_exact:
            assert hit.privacy_lo == true_privacy


def test_pool_superset_stability():
    pool_small = (0, 1, 3, 5)
    pool_big = (0, 1, 3, 5, 7, 11)
    spec_small = SearchSpec(n=31, pool=pool_small, max_c_cosets=1, max_d_cosets=2, min_privacy=2, max_results=50)
    spec_big = SearchSpec(n=31, pool=pool_big, max_c_cosets=1, max_d_cosets=2, min_privacy=2, max_results=200)
    small_hits = {(h.storage.mask, h.retrieval.mask) for h in search_pir_codes(spec_small).hits}
    big_hits = {(h.storage.mask, h.retrieval.mask) for h in search_pir_codes(spec_big).hits}
    assert small_hits <= big_hits


def test_fixed_storage_with_complements():
    spec = SearchSpec(
        n=63,
        fixed_c=(21,),
        d_complements=True,
        max_d_cosets=2,
        min_rate=Fraction(6, 63),
        objective="privacy",
        max_results=3,
    )
    res = search_pir_codes(spec)
    assert res.hits
    top = res.hits[0]
    assert top.privacy_exact and top.privacy_lo == 19
    assert top.rate == Fraction(6, 63)


def test_rate_objective_ordering():
    spec = SearchSpec(n=31, max_c_cosets=1, max_d_cosets=2, min_privacy=1, objective="rate", max_results=10)
    hits = search_pir_codes(spec).hits
    rates = [h.rate for h in hits]
    assert rates == sorted(rates, reverse=True)
