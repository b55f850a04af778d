import pytest
from hypothesis import given, settings, strategies as st

from apdecomp import golden
from apdecomp.arith import is_ap
from apdecomp.search import (
    ApDecomposition, StructureError, canonicalize, classify_features, count_3ap, d_table,
    double_barrelled, find_3ap, find_4ap, make_decomposition, multiplicity_phenomena,
    quartet_multipliers, quartet_search, quartets,
)
from apdecomp.tables import printed_key
from apdecomp.units import is_direct_product

import oracles


def keys(decs):
    return {d.key() for d in decs}


def test_find_3ap_examples():
    assert find_3ap(71) == []
    u31 = find_3ap(31)
    assert any(d.generators == (30, 2, 5) and d.orders == (2, 5, 3) and d.diff == 3 for d in u31)
    assert len(find_3ap(273)) == golden.U273_STRONG


@pytest.mark.parametrize("n", [7, 9, 15, 31, 35, 55, 61, 63, 65, 91, 104, 105, 120, 175, 211])
def test_find_3ap_matches_oracle(n):
    for weak in (False, True):
        got = sorted((d.first, d.diff) for d in find_3ap(n, allow_weak=weak))
        assert got == sorted(oracles.ap_decompositions(n, 3, weak))


def test_find_4ap_matches_oracle():
    for n in (104, 105, 120, 156):
        got = sorted((d.first, d.diff) for d in find_4ap(n, allow_weak=True))
        assert got == sorted(oracles.ap_decompositions(n, 4, True))


def test_results_sorted_and_valid():
    for n in range(3, 300):
        decs = find_3ap(n, allow_weak=True)
        assert [(d.diff, d.first) for d in decs] == sorted((d.diff, d.first) for d in decs)
        for d in decs:
            assert d.diff * 2 < n
            assert is_ap(d.generators, n)
            assert is_direct_product(n, d.generators)
            assert d.orders.count(1) <= 1
            assert d.is_weak == (1 in d.orders)


def test_threads_do_not_change_output():
    for n in (273, 455, 775):
        assert find_3ap(n) == find_3ap(n, threads=4)
        assert count_3ap(n) == count_3ap(n, threads=3)


def test_canonicalize_examples():
    d = make_decomposition(31, [30, 2, 5])
    assert canonicalize(d) == d
    mate = ApDecomposition(31, 5, 28, d.factors[::-1])
    assert canonicalize(mate).first == 30 and canonicalize(mate).diff == 3


def test_reversal_symmetry_and_idempotence():
    for n in range(3, 301):
        decs = find_3ap(n, allow_weak=True)
        for d in decs:
            r = d.reversed()
            assert r.first == (d.first + 2 * d.diff) % n and r.diff == n - d.diff
            assert is_direct_product(n, r.generators)
            assert canonicalize(canonicalize(r)) == canonicalize(r) == d


def test_count_matches_find():
    for n in list(range(3, 200)) + [175, 605, 775]:
        strong, weak = count_3ap(n)
        assert strong == len(find_3ap(n))
        assert strong + weak == len(find_3ap(n, allow_weak=True))


@pytest.mark.parametrize("n, count", [(175, 6), (605, 0), (775, 188)])
def test_count_examples(n, count):
    assert count_3ap(n)[0] == count


def test_make_decomposition_rejects_bad_input():
    with pytest.raises(ValueError):
        make_decomposition(31, [5, 25, 30])
    with pytest.raises(ValueError):
        make_decomposition(31, [5, 5, 5])


def test_d_table_small_against_oracle():
    table = d_table(60)
    brute = {}
    for n in range(3, 61):
        x = oracles.phi(n) // oracles.lam(n)
        brute[x] = max(brute.get(x, 0), len(oracles.ap_decompositions(n)))
    assert table == brute


def test_find_4ap_examples():
    want = {printed_key(104, p) for p in golden.FOUR_AP[104]}
    assert keys(find_4ap(104)) == want
    n, printed = golden.FOUR_AP_WEAK_PRIME
    assert printed_key(n, printed) in keys(find_4ap(n, allow_weak=True))


def test_classify_features_examples():
    f61 = classify_features(make_decomposition(61, [9, 11, 13]))
    assert f61.orders_in_ap
    assert classify_features(make_decomposition(455, [92, 93, 94])).consecutive_generators
    assert classify_features(make_decomposition(91, [9, 18, 27])).x_equals_k
    assert classify_features(make_decomposition(65, [61, 57, 53])).x_equals_k
    assert classify_features(make_decomposition(275, [136, 274, 137])).outer_generators_differ_by_one
    assert classify_features(make_decomposition(703, [700, 701, 702])).negative_consecutive
    assert classify_features(make_decomposition(911, [196, 550, 904])).orders_in_ap


def test_intro_examples_found():
    for n, printed in golden.INTRO_EXAMPLES.items():
        found = keys(find_3ap(n))
        for p in printed:
            assert printed_key(n, p) in found, (n, p)


def test_multiplicity_phenomena_examples():
    r211 = multiplicity_phenomena(211)
    assert r211.a
    assert {(5, 6, 7), (2, 7, 15), (2, 3, 35)} <= set(r211.by_multiset)
    assert multiplicity_phenomena(547).b
    r191 = multiplicity_phenomena(191)
    assert r191.c and len(r191.by_ordered[(5, 2, 19)]) == 2


def test_double_barrelled_examples():
    p67 = [d for d in double_barrelled(67) if d.case == 1]
    assert len(p67) == 1
    pr = p67[0]
    assert {pr.first.key(), pr.second.key()} == {
        printed_key(67, x) for x in golden.DOUBLE_BARRELLED[1][67]}
    assert [d.case for d in double_barrelled(349)] == [2]
    assert not [d for d in double_barrelled(31) if d.case == 1]


def test_double_barrelled_991_pair():
    # same pattern as n=67, built from the printed type (b) and (c) rows
    pairs = [d for d in double_barrelled(991) if d.case == 1]
    assert len(pairs) == 1
    pr = pairs[0]
    want = {printed_key(991, golden.TYPE_2_3["b"][991][0]), printed_key(991, golden.TYPE_2_3["c"][991][0])}
    assert {pr.first.key(), pr.second.key()} == want
    n = 991
    u, v = pr.linked
    assert oracles.closure([u], n) == oracles.closure([v], n)


def test_quartets_examples():
    for n, (lam, prog1, prog2) in golden.QUARTETS.items():
        found = quartets(n)
        progs = {q.progression for q in found} | {q.partner_progression for q in found}
        norm = {min(p, p[::-1]) for p in progs}
        assert min(prog1, prog1[::-1]) in norm, n
        assert min(prog2, prog2[::-1]) in norm, n


def test_quartet_windows_and_closure():
    for n in golden.QUARTETS:
        decs = keys(find_3ap(n))
        for q in quartets(n):
            for w in q.windows():
                assert canonical(w, n) in decs
            # re-applying the multipliers gives nothing new
            x, y, z = q.progression[:3]
            base = {canonical((x, y, z), n)} | {canonical(tuple(u * v % n for v in (x, y, z)), n)
                                                for u in q.multipliers}
            assert base <= {canonical(w, n) for w in q.windows()}
            for u in q.multipliers:
                again = [u * v % n for v in (x, y, z)]
                for u2 in quartet_multipliers(n, *again):
                    assert canonical(tuple(u2 * v % n for v in again), n) in base


def canonical(gens, n):
    return gens[::-1] if (gens[1] - gens[0]) % n * 2 > n else tuple(gens)


def test_quartets_precondition():
    with pytest.raises(StructureError):
        quartets(91)


def test_quartet_315_counterexample():
    lam, printed = golden.QUARTET_315
    terms = tuple(g for g, _ in printed)
    hits = [q for q in quartet_search(315) if q.terms in (terms, terms[::-1])]
    assert len(hits) == 1
    assert hits[0].orders in (tuple(o for _, o in printed), tuple(o for _, o in printed)[::-1])
    assert not hits[0].end_product


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 400))
def test_decompositions_orders_multiply_to_phi(n):
    from apdecomp.arith import euler_phi
    for d in find_3ap(n, allow_weak=True):
        prod = 1
        for o in d.orders:
            prod *= o
        assert prod == euler_phi(n)


def test_u281_has_no_strong_3ap_by_brute_force():
    # 280 = 2^3 * 5 * 7 admits the order split (8, 5, 7), yet no progression realises it
    assert oracles.ap_decompositions(281) == []
    assert find_3ap(281) == []
