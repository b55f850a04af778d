import pytest

from apdecomp import golden
from apdecomp.arith import inverse_mod, is_ap, order_mod, primes_between
from apdecomp.search import find_3ap, make_decomposition
from apdecomp.tables import printed_key
from apdecomp.theorems import (
    HYPOTHESIS_FAILED, OUT_OF_FAMILY, FamilyError, InvariantViolation, eq9_search,
    quadratic_roots, table2_classify, thm_2_1, thm_2_2, thm_2_3, thm_2_4_classify, thm_2_5,
    thm_2_6, thm_4_1_check, thm_4_2_check, thm_4_4, type_2_3, weak_6p_class,
)
from apdecomp.units import is_direct_product

import oracles


def class_36(limit):
    return [n for n in primes_between(8, limit) if n % 36 in (7, 31)]


def test_quadratic_roots_547():
    r = quadratic_roots(547)
    assert (r.x1, r.x2) == golden.NOTE_2_1_547_ROOTS


def test_quadratic_roots_31_brute_force():
    r = quadratic_roots(31)
    roots = [x for x in range(31) if (x * x + 3 * x + 3) % 31 == 0]
    assert sorted(roots) == sorted((r.x1, r.x2))
    assert oracles.order(r.x1, 31) % 2 == 1 and oracles.order(r.x2, 31) % 2 == 0
    assert 30 % oracles.order(r.x1, 31) == 0


def test_quadratic_roots_vieta_to_1e5():
    for n in [n for n in primes_between(8, 10**5) if n % 36 in (7, 31)]:
        r = quadratic_roots(n)
        assert (r.x1 + r.x2) % n == n - 3
        assert r.x1 * r.x2 % n == 3
        assert order_mod(r.y1, n) == order_mod(r.y2, n) == 3


def test_family_errors():
    for fn in (quadratic_roots, thm_2_1, thm_2_2, thm_2_3):
        with pytest.raises(FamilyError):
            fn(61)
        with pytest.raises(FamilyError):
            fn(91)
    assert thm_2_1(61, strict=False).applicability == OUT_OF_FAMILY


def test_thm_2_1_examples():
    out = thm_2_1(31)
    assert out.applies and out.witness.generators == (25, 30, 4) and out.witness.orders == (3, 2, 5)
    out = thm_2_1(907)
    assert out.witness.generators == (522, 906, 383) and out.witness.orders == (3, 2, 151)
    assert thm_2_1(139).applicability == HYPOTHESIS_FAILED


def test_thm_2_2_examples():
    out = thm_2_2(67)
    assert out.witness.generators == (59, 29, 66) and out.witness.orders == (11, 3, 2)
    out = thm_2_2(967)
    assert out.applies
    assert out.witness.generators[0] == 682
    assert out.witness.orders[0] == 161 == oracles.order(682, 967)
    assert thm_2_2(31).applicability == HYPOTHESIS_FAILED and thm_2_1(31).applies


def test_thm_2_3_examples():
    out = thm_2_3(103)
    assert out.witness.generators == (56, 79, 102) and out.witness.orders == (3, 17, 2)
    assert out.diagnostics["z"] == "x1"
    out = thm_2_3(211)
    assert out.witness.generators == (196, 203, 210)
    assert out.diagnostics["z"] == "x2"
    assert thm_2_3(43).applicability == HYPOTHESIS_FAILED
    r = quadratic_roots(43)
    assert all(oracles.order(z * inverse_mod(2, 43) % 43, 43) != 7 for z in (r.x1, r.x2))


def test_witnesses_are_decompositions():
    for n in class_36(1000):
        for fn in (thm_2_1, thm_2_2, thm_2_3):
            out = fn(n)
            assert (out.witness is not None) == out.applies
            if out.applies:
                assert is_ap(out.witness.generators, n)
                assert is_direct_product(n, out.witness.generators)


def test_thm_2_4_examples():
    assert thm_2_4_classify(31, make_decomposition(31, [25, 30, 4])) == "2.1"
    assert thm_2_4_classify(31, make_decomposition(31, [5, 2, 30])) == "2.3"


def test_thm_2_4_exhaustive_below_1000():
    for n in class_36(1000):
        target = sorted([2, 3, (n - 1) // 6])
        for d in find_3ap(n):
            if sorted(d.orders) == target:
                assert thm_2_4_classify(n, d) in ("2.1", "2.2", "2.3")


def test_thm_2_4_rejects_wrong_orders():
    with pytest.raises(FamilyError):
        thm_2_4_classify(61, make_decomposition(61, [9, 11, 13]))


def test_thm_2_5_examples():
    outs = [o for o in thm_2_5(61) if o.applies]
    assert [o.witness.generators for o in outs] == [(13, 11, 9)]
    w661 = [o.witness for o in thm_2_5(661) if o.applies]
    assert len(w661) == 2
    big = sorted(w.generators[2] for w in w661)
    assert big == [85, 509] and pow(509, 3, 661) == 85
    assert not any(o.applies for o in thm_2_5(277))


def test_thm_2_6_examples():
    outs = [o for o in thm_2_6(157) if o.applies]
    assert outs[0].witness.generators == (153, 12, 28) and outs[0].diagnostics["ord_x"] == 39
    outs = [o for o in thm_2_6(997) if o.applies]
    assert outs[0].witness.generators == (226, 692, 161)
    assert not any(o.applies for o in thm_2_6(853))


def test_type_2_3_examples():
    a = [o.witness for o in type_2_3(191, "a") if o.applies]
    assert {w.key() for w in a} == {printed_key(191, p) for p in golden.TYPE_2_3["a"][191]}
    b = [o.witness for o in type_2_3(131, "b") if o.applies]
    assert [w.generators for w in b] == [(107, 53, 130)]
    for v in "abc":
        assert not any(o.applies for o in type_2_3(71, v))
    with pytest.raises(FamilyError):
        type_2_3(61, "a")


@pytest.mark.parametrize("p", [5, 7, 97])
def test_thm_4_1(p):
    assert thm_4_1_check(p)
    assert oracles.ap_decompositions(3 * p, 3, True) == []


@pytest.mark.parametrize("n", [9, 27, 63])
def test_thm_4_2(n):
    assert thm_4_2_check(n)
    step = n // 3
    for a in oracles.units(n):
        gens = [(a + i * step) % n for i in range(3)]
        if all(oracles.order(g, n) for g in gens):
            assert not oracles.is_direct(gens, n)


def test_thm_4_4_examples():
    out = thm_4_4(7, 5)
    assert out.witness.generators == (11, 34, 22) and out.witness.orders == (3, 2, 4)
    out = thm_4_4(43, 5)
    assert out.witness.generators == (126, 214, 87) and out.witness.orders == (21, 2, 4)
    assert thm_4_4(7, 41).applicability == HYPOTHESIS_FAILED
    assert oracles.order(41 - 3, 41) == 8
    with pytest.raises(FamilyError):
        thm_4_4(5, 7)


def test_thm_4_4_witness_reduces_to_weak_source():
    for n, (p, q, _) in golden.THM_4_4.items():
        w = thm_4_4(p, q).witness
        assert tuple(g % p for g in w.generators) == ((-3) % p, p - 1, 1)


def test_negation_pair_search_examples():
    pairs = eq9_search(91)
    got = {d.key() for pr in pairs for d in pr}
    assert got == {printed_key(91, p) for p in golden.TABLE_1[91]}
    assert len([d for pr in eq9_search(247) for d in pr]) == 4
    assert eq9_search(259) == []


def test_negation_pairs_related_by_negation():
    for n in golden.TABLE_1:
        for a, b in eq9_search(n):
            # <2x+3> <x+1> <-1>  vs  <-2x-3> <-x-2> <-1>
            assert a.generators[2] == b.generators[2] == n - 1
            assert (a.generators[0] + b.generators[0]) % n == 0
            assert (a.generators[1] + b.generators[1]) % n == n - 1


def test_weak_6p_examples():
    assert [d.generators for d in weak_6p_class(43)] == [(1, 4, 7)]
    assert len(weak_6p_class(223)) == 2
    d67 = weak_6p_class(67)
    assert [d.generators for d in d67] == [(1, 30, 59)] and d67[0].orders == (1, 6, 11)


def test_table2_classify_examples():
    assert table2_classify(make_decomposition(65, [27, 44, 61]), 13) == "A"
    assert table2_classify(make_decomposition(185, [43, 112, 181]), 37) == "B"
    assert table2_classify(make_decomposition(905, [363, 316, 269]), 181) == "-"


def test_invariant_violation_is_loud():
    # orders {2, 3, 5} with y = 5, but 8 is none of -x-3, 2x+3, x/2 for x = 4
    from apdecomp.units import CyclicFactor
    n = 31
    d = make_decomposition(n, [30, 2, 5])
    fake = type(d)(n, 30, 3, (CyclicFactor(30, 2), CyclicFactor(8, 5), CyclicFactor(5, 3)))
    with pytest.raises(InvariantViolation):
        thm_2_4_classify(n, fake)
