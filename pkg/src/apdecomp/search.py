"""Exhaustive search for decompositions U_n = <x> x <x+k> x <x+2k> (and 4-term).

Decompositions are identified up to reversal: (x, k) and (x + 2k, n - k)
list the same factors in opposite order, and the search reports only the
canonical member, the one with the smaller difference.  All counts in
this module use that convention.
"""

from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import _backend
from .arith import ModLike, Modulus, as_modulus, is_ap
from .units import CyclicFactor, factors_of, is_direct_product, order_table


class StructureError(ValueError):
    """A modulus does not have the group structure an operation requires."""


@dataclass(frozen=True)
class ApDecomposition:
    """Factors <x + i*k> for i = 0..len-1 whose direct product is U_n."""

    n: int
    first: int
    diff: int
    factors: Tuple[CyclicFactor, ...]

    @property
    def modulus(self) -> Modulus:
        return as_modulus(self.n)

    @property
    def generators(self) -> Tuple[int, ...]:
        return tuple(f.generator for f in self.factors)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(f.order for f in self.factors)

    @property
    def is_weak(self) -> bool:
        return 1 in self.orders

    @property
    def strength(self) -> str:
        return "weak" if self.is_weak else "strong"

    def reversed(self) -> "ApDecomposition":
        last = self.factors[-1].generator
        return ApDecomposition(self.n, last, (-self.diff) % self.n, self.factors[::-1])

    def key(self) -> Tuple[int, ...]:
        """Orientation-free identity: the canonical generator tuple."""
        return canonicalize(self).generators

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "first": self.first,
            "diff": self.diff,
            "generators": list(self.generators),
            "orders": list(self.orders),
            "strength": self.strength,
        }

    def __str__(self):
        body = " x ".join(str(f) for f in self.factors)
        return f"U_{self.n} = {body}"


def make_decomposition(m: ModLike, gens: Sequence[int]) -> ApDecomposition:
    """Build an ApDecomposition from explicit generators (validated)."""
    m = as_modulus(m)
    n = m.n
    gens = [g % n for g in gens]
    if not is_ap(gens, n):
        raise ValueError(f"generators {gens} are not in AP mod {n}")
    diff = (gens[1] - gens[0]) % n
    if diff == 0:
        raise ValueError("difference must be nonzero")
    d = ApDecomposition(n, gens[0], diff, factors_of(m, gens))
    if d.orders.count(1) > 1:
        raise ValueError("at most one trivial factor is allowed")
    if not is_direct_product(m, d.factors):
        raise ValueError(f"{d} is not a direct product")
    return d


def _from_hit(m: Modulus, x: int, k: int, length: int) -> ApDecomposition:
    n = m.n
    gens = [(x + i * k) % n for i in range(length)]
    return ApDecomposition(n, x, k, factors_of(m, gens))


def canonicalize(d: ApDecomposition) -> ApDecomposition:
    """The member of {d, reversed d} with the smaller difference."""
    if d.diff * 2 > d.n:
        return d.reversed()
    return d


def _k_chunks(k_lo: int, k_hi: int, threads: int) -> List[Tuple[int, int]]:
    if threads <= 1 or k_hi - k_lo < 2 * threads:
        return [(k_lo, k_hi)]
    step = math.ceil((k_hi - k_lo) / (4 * threads))
    return [(a, min(k_hi, a + step)) for a in range(k_lo, k_hi, step)]


def _run(m: Modulus, length: int, allow_weak: bool, count_only: bool, threads: int):
    n = m.n
    k_hi = (n - 1) // 2 + 1
    if n < 3:
        return (0, 0) if count_only else []
    ords = order_table(m)
    chunks = _k_chunks(1, k_hi, threads)

    def job(lo_hi):
        lo, hi = lo_hi
        return _backend.ap_search(n, m.phi, ords, length, allow_weak, lo, hi, count_only)

    if len(chunks) == 1:
        parts = [job(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(job, chunks))
    if count_only:
        return tuple(map(sum, zip(*parts)))
    return [hit for part in parts for hit in part]


def find_ap(m: ModLike, length: int = 3, allow_weak: bool = False,
            threads: int = 1) -> List[ApDecomposition]:
    """All canonical AP decompositions of the given length, sorted by (diff, first)."""
    m = as_modulus(m)
    hits = _run(m, length, allow_weak, False, threads)
    return [_from_hit(m, x, k, length) for x, k in hits]


def find_3ap(m: ModLike, allow_weak: bool = False, threads: int = 1) -> List[ApDecomposition]:
    return find_ap(m, 3, allow_weak, threads)


def find_4ap(m: ModLike, allow_weak: bool = False, threads: int = 1) -> List[ApDecomposition]:
    return find_ap(m, 4, allow_weak, threads)


def count_3ap(m: ModLike, threads: int = 1) -> Tuple[int, int]:
    """(strong, weak) numbers of canonical 3AP decompositions."""
    return _run(as_modulus(m), 3, True, True, threads)


def count_ap(m: ModLike, length: int, allow_weak: bool = True, threads: int = 1) -> Tuple[int, int]:
    return _run(as_modulus(m), length, allow_weak, True, threads)


def d_table(limit: int, threads: int = 1, odd_only: bool = False) -> Dict[int, int]:
    """Maximum strong 3AP count per value of xi(n), over 3 <= n <= limit."""
    if limit < 3:
        raise ValueError("limit must be at least 3")
    ns = [n for n in range(3, limit + 1) if not (odd_only and n % 2 == 0)]

    def job(n):
        m = as_modulus(n)
        return m.xi, _run(m, 3, False, True, 1)[0]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(job, ns))
    else:
        rows = [job(n) for n in ns]
    table: Dict[int, int] = {}
    for x, count in rows:
        table[x] = max(table.get(x, 0), count)
    return dict(sorted(table.items()))


# -- features and phenomena -------------------------------------------------

@dataclass(frozen=True)
class FeatureTags:
    orders_in_ap: bool
    consecutive_generators: bool
    x_equals_k: bool
    outer_generators_differ_by_one: bool
    negative_consecutive: bool


def classify_features(d: ApDecomposition) -> FeatureTags:
    n = d.n
    g = d.generators
    o = d.orders
    rev = d.reversed()
    steps = {g[i + 1] - g[i] for i in range(len(g) - 1)}
    return FeatureTags(
        orders_in_ap=len({o[i + 1] - o[i] for i in range(len(o) - 1)}) == 1,
        consecutive_generators=steps in ({1}, {-1}),
        x_equals_k=d.first == d.diff or rev.first == rev.diff,
        outer_generators_differ_by_one=abs(g[-1] - g[0]) == 1,
        negative_consecutive=sorted(g) == [n - len(g) + i for i in range(len(g))],
    )


@dataclass
class PhenomenaReport:
    """Groupings behind the three multiplicity phenomena.

    ``by_multiset`` keys are sorted order tuples; ``middle_orders`` maps each
    multiset to the set of middle-factor orders seen; ``by_ordered`` keys are
    order tuples up to reversal.
    """

    n: int
    by_multiset: Dict[Tuple[int, ...], List[ApDecomposition]]
    middle_orders: Dict[Tuple[int, ...], set]
    by_ordered: Dict[Tuple[int, ...], List[ApDecomposition]]

    @property
    def a(self) -> bool:
        return len(self.by_multiset) > 1

    @property
    def b(self) -> bool:
        return any(len(v) > 1 for v in self.middle_orders.values())

    @property
    def c(self) -> bool:
        return any(len(v) > 1 for v in self.by_ordered.values())


def multiplicity_phenomena(m: ModLike, decomps: Optional[List[ApDecomposition]] = None) -> PhenomenaReport:
    m = as_modulus(m)
    if decomps is None:
        decomps = find_3ap(m)
    by_multiset = defaultdict(list)
    middle = defaultdict(set)
    by_ordered = defaultdict(list)
    for d in decomps:
        ms = tuple(sorted(d.orders))
        by_multiset[ms].append(d)
        middle[ms].add(d.orders[1])
        by_ordered[min(d.orders, d.orders[::-1])].append(d)
    return PhenomenaReport(m.n, dict(by_multiset), dict(middle), dict(by_ordered))


# -- double-barrelled pairs --------------------------------------------------

@dataclass(frozen=True)
class DoubleBarrelled:
    """Two decompositions sharing two generators.

    In case 1 the shared pair is the outer pair of ``first`` and an adjacent
    pair of ``second``; in case 2 it is adjacent in both.  ``linked`` are the
    two unshared generators, each a power of the other.
    """

    case: int
    first: ApDecomposition
    second: ApDecomposition
    linked: Tuple[int, int]


def _power_related(a: int, b: int, n: int) -> bool:
    # <a> == <b> in U_n
    table = order_table(n)
    if table[a] != table[b]:
        return False
    t = int(table[a])
    x = 1
    for _ in range(t):
        x = x * a % n
        if x == b:
            return True
    return False


def double_barrelled(m: ModLike, decomps: Optional[List[ApDecomposition]] = None) -> List[DoubleBarrelled]:
    m = as_modulus(m)
    n = m.n
    if decomps is None:
        decomps = find_3ap(m)
    out = []
    for i, d1 in enumerate(decomps):
        for d2 in decomps[i + 1:]:
            shared = set(d1.generators) & set(d2.generators)
            if len(shared) != 2:
                continue
            pos1 = sorted(d1.generators.index(s) for s in shared)
            pos2 = sorted(d2.generators.index(s) for s in shared)
            adj1 = pos1[1] - pos1[0] == 1
            adj2 = pos2[1] - pos2[0] == 1
            if adj1 and adj2:
                case, a, b = 2, d1, d2
            elif adj1 != adj2:
                case = 1
                a, b = (d2, d1) if adj1 else (d1, d2)
            else:
                continue
            u = next(g for g in a.generators if g not in shared)
            v = next(g for g in b.generators if g not in shared)
            if _power_related(u, v, n):
                out.append(DoubleBarrelled(case, a, b, (u, v)))
    return out


# -- quartets -----------------------------------------------------------------

@dataclass(frozen=True)
class QuartetResult:
    """Two 4-term progressions whose 3-term windows are decompositions.

    ``progression`` is [x, y, z, w]; ``end_product`` records whether
    w == xyz (mod n).  ``multipliers`` are the units u that carry the base
    window [x, y, z] to the other windows.
    """

    n: int
    progression: Tuple[int, int, int, int]
    partner_progression: Tuple[int, int, int, int]
    multipliers: Tuple[int, ...]
    orders: Tuple[int, int, int, int]
    end_product: bool

    def windows(self) -> List[Tuple[int, int, int]]:
        out = []
        for prog in (self.progression, self.partner_progression):
            out.append(tuple(prog[:3]))
            out.append(tuple(prog[1:]))
        return out


def _three_odd_primes(m: Modulus) -> bool:
    return len(m.factorization) == 3 and all(p % 2 and e == 1 for p, e in m.factorization)


def quartet_multipliers(m: ModLike, x: int, y: int, z: int) -> Tuple[int, int, int]:
    """Non-identity units u carrying [x, y, z] to another decomposition."""
    m = as_modulus(m)
    n, lam = m.n, m.lam
    h = pow(x, lam // 2, n)
    if lam % 4 == 0:
        return (h, y * z % n, h * y * z % n)
    return (h * y % n, h * z % n, y * z % n)


def quartets(m: ModLike) -> List[QuartetResult]:
    """Quartets from decompositions with order pattern (lambda, 2, 2).

    Requires n to be a product of three distinct odd primes with xi(n) = 4.
    """
    m = as_modulus(m)
    n = m.n
    if not _three_odd_primes(m):
        raise StructureError(f"{n} is not a product of three distinct odd primes")
    if m.xi != 4:
        raise StructureError(f"xi({n}) = {m.xi}, expected 4")
    lam = m.lam
    seen = set()
    out = []
    for d in find_3ap(m):
        for e in (d, d.reversed()):
            if e.orders != (lam, 2, 2):
                continue
            x, y, z = e.generators
            prog = (x, y, z, x * y * z % n)
            key = min(prog, prog[::-1])
            if key in seen:
                continue
            us = quartet_multipliers(m, x, y, z)
            partner_u = us[0]
            px, py, pz = (partner_u * v % n for v in (x, y, z))
            partner = (px, py, pz, px * py * pz % n)
            seen.add(key)
            seen.add(min(partner, partner[::-1]))
            table = order_table(m)
            out.append(QuartetResult(
                n, prog, partner, us,
                tuple(int(table[v]) for v in prog), True,
            ))
    return out


@dataclass(frozen=True)
class QuartetProgression:
    n: int
    terms: Tuple[int, int, int, int]
    orders: Tuple[int, int, int, int]
    end_product: bool


def quartet_search(m: ModLike) -> List[QuartetProgression]:
    """Every 4-term AP whose first and last 3-term windows both decompose U_n.

    No structural precondition.  Each progression is reported once, in the
    orientation that is lexicographically smaller; ``end_product`` tells
    whether the last term is the product of the other three.
    """
    m = as_modulus(m)
    n = m.n
    decs = {d.key() for d in find_3ap(m)}
    table = order_table(m)
    found = set()
    for key in decs:
        for x, y, z in (key, key[::-1]):
            w = (2 * z - y) % n
            if table[w] == 0:
                continue
            tail = (y, z, w) if (z - y) % n * 2 < n else (w, z, y)
            if tail in decs:
                prog = (x, y, z, w)
                found.add(min(prog, prog[::-1]))
    out = []
    for p in sorted(found):
        out.append(QuartetProgression(
            n, p, tuple(int(table[v]) for v in p), p[3] == p[0] * p[1] * p[2] % n,
        ))
    return out
