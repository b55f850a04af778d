import math
import random

import numpy as np
import pytest

from apdecomp import golden
from apdecomp.arith import RangeError
from apdecomp.gf import (
    CONWAY, CharacteristicError, ConstructionError, build_field, decomposition_from_logs,
    find_3ap_field, find_primitive_polynomial, frobenius, is_irreducible, is_primitive,
    prime_subfield_argument_check, subfield_family_moduli,
)

import oracles


def test_build_field_examples():
    f = build_field(11, 2)
    assert f.spec.poly == (2, 7, 1)
    assert build_field(29, 2).spec.poly == (2, (-5) % 29, 1)
    with pytest.raises(CharacteristicError):
        build_field(2, 8)
    with pytest.raises(RangeError):
        build_field(101, 3, (1, 0, 0, 1))


def test_bad_polynomials():
    with pytest.raises(ConstructionError):
        build_field(11, 2, (0, 1))          # x^2 is reducible
    with pytest.raises(ConstructionError):
        build_field(7, 2, (1, 0, 1))        # x^2 + 1 over GF(7) is irreducible but not primitive
    with pytest.raises(ConstructionError):
        build_field(7, 3)                   # no built-in polynomial


@pytest.mark.parametrize("pk", sorted(CONWAY))
def test_conway_polynomials_primitive(pk):
    p, k = pk
    assert is_irreducible(CONWAY[pk], p) and is_primitive(CONWAY[pk], p)


@pytest.mark.parametrize("pk", [(11, 2), (19, 2), (23, 2), (29, 2), (11, 3), (3, 4), (5, 3)])
def test_log_table_against_polynomial_powers(pk):
    p, k = pk
    poly = CONWAY.get(pk) or find_primitive_polynomial(p, k)
    f = build_field(p, k, poly)
    powers = oracles.field_powers(list(poly), p)
    assert len(powers) == f.q - 1
    for e, coeffs in enumerate(powers):
        code = sum(c * p**i for i, c in enumerate(coeffs))
        assert f.exp[e] == code and f.log[code] == e
    for a in range(1, f.q):
        assert f.exp[f.log[a]] == a
        assert f.order[a] == (f.q - 1) // math.gcd(f.q - 1, int(f.log[a]))


def test_printed_field_decompositions():
    for (p, k), printed in golden.GF.items():
        f = build_field(p, k)
        found = {frozenset(d.logs): d for d in find_3ap_field(f)}
        for row in printed:
            logs = frozenset(e for e, _ in row)
            assert logs in found, (p, k, row)
            d = found[logs]
            assert dict(zip(d.logs, d.orders)) == dict(row)


def test_one_per_order_set():
    for (p, k), printed in golden.GF.items():
        chosen = find_3ap_field(build_field(p, k), one_per_order_set=True)
        assert sorted(tuple(sorted(d.orders)) for d in chosen) == \
            sorted(tuple(sorted(o for _, o in row)) for row in printed)


def test_gf_11_cubed_impossible_order_set():
    (p, k), orders = golden.GF_IMPOSSIBLE
    assert find_3ap_field(build_field(p, k), orders=orders) == []


@pytest.mark.parametrize("pk", [(5, 2), (7, 2), (11, 2), (13, 2), (3, 5), (5, 3), (17, 2), (19, 2)])
def test_orders_method_matches_sweep(pk):
    p, k = pk
    f = build_field(p, k, CONWAY.get(pk) or find_primitive_polynomial(p, k))
    for weak in (False, True):
        a = [(d.elements, d.orders) for d in find_3ap_field(f, allow_weak=weak)]
        b = [(d.elements, d.orders) for d in find_3ap_field(f, allow_weak=weak, method="sweep")]
        assert sorted(a) == sorted(b)


def _generic_direct(f, elems):
    # closure under field multiplication, no use of cyclicity
    ords = [int(f.order[e]) for e in elems]
    if math.prod(ords) != f.q - 1:
        return False
    seen = {1}
    for e in elems:
        seen = {f.mul(a, b) for a in seen for b in _powers(f, e)}
    return len(seen) == f.q - 1


def _powers(f, e):
    out, cur = [1], e
    while cur != 1:
        out.append(cur)
        cur = f.mul(cur, e)
    return out


def _candidates(f, max_x=400):
    """Triples (x, x+d, x+2d) whose orders multiply to q - 1, at most one trivial.

    For large fields only a random subset of first terms is scanned.
    """
    xs = np.arange(1, f.q)
    if len(xs) > max_x:
        xs = np.array(sorted(random.Random(f.q).sample(xs.tolist(), max_x)))
    xs, ds = np.meshgrid(xs, np.arange(1, f.q), indexing="ij")
    xs, ds = xs.ravel(), ds.ravel()
    ys = f.add(xs, ds)
    zs = f.add(ys, ds)
    o = [f.order[v] for v in (xs, ys, zs)]
    ok = (ys > 0) & (zs > 0) & (o[0] * o[1] * o[2] == f.q - 1)
    ok &= (o[0] == 1).astype(int) + (o[1] == 1) + (o[2] == 1) <= 1
    return list(zip(xs[ok].tolist(), ys[ok].tolist(), zs[ok].tolist()))


@pytest.mark.parametrize("pk", [(5, 2), (7, 2), (3, 4), (11, 2), (13, 2), (5, 3), (23, 2), (31, 2), (97, 2)])
def test_cyclic_shortcut_sound(pk):
    p, k = pk
    f = build_field(p, k, CONWAY.get(pk) or find_primitive_polynomial(p, k))
    found = {d.elements for d in find_3ap_field(f, allow_weak=True)}
    found |= {e[::-1] for e in found}
    cands = _candidates(f)
    if len(cands) > 300:
        cands = random.Random(p * k).sample(cands, 300)
    for triple in cands:
        assert (triple in found) == _generic_direct(f, triple), triple


def test_frobenius_invariance():
    for (p, k) in golden.GF:
        f = build_field(p, k)
        for d in find_3ap_field(f):
            img = frobenius(d)
            assert img.orders == d.orders
            again = decomposition_from_logs(f, img.logs)
            assert again is not None and again.orders == d.orders


def test_prime_subfield_property():
    # the only prime-power field below 10^5 in the family that is not prime is GF(7^5)
    fam = subfield_family_moduli(10**5)
    assert [pk for pk in fam if pk[1] > 1] == [(7, 5)]
    f = build_field(7, 5, find_primitive_polynomial(7, 5))
    assert prime_subfield_argument_check(f)
    for p, _ in fam[:30]:
        assert prime_subfield_argument_check(build_field(p))
    assert prime_subfield_argument_check(build_field(11, 2))


def test_prime_subfield_argument_on_prime_fields():
    # in GF(p) the property is vacuous, but the {2,3,.} decompositions exist
    f = build_field(31)
    decs = find_3ap_field(f, orders=(2, 3, 5))
    assert decs and all(f.in_prime_subfield(e) for d in decs for e in d.elements)


def test_prime_field_matches_unit_group():
    from apdecomp.search import find_3ap
    for p in (31, 61, 211):
        f = build_field(p)
        ints = {tuple(sorted(int(f.digits[e][0]) for e in d.elements)) for d in find_3ap_field(f)}
        assert ints == {tuple(sorted(d.generators)) for d in find_3ap(p)}
