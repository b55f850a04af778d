"""The unit group U_n: elements, abelian structure, direct-product tests."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple, Union

import numpy as np

from . import _backend
from .arith import ModLike, Modulus, NotAUnitError, as_modulus, factorize, order_mod

MAX_FACTORS = 8


@dataclass(frozen=True, order=True)
class CyclicFactor:
    """A cyclic factor <generator> of U_n together with its order."""

    generator: int
    order: int

    def __str__(self):
        return f"<{self.generator}>_{self.order}"


@dataclass(frozen=True)
class GroupStructure:
    """Invariant factors d_1 | d_2 | ... | d_r plus the per-prime-power pieces."""

    invariant_factors: Tuple[int, ...]
    components: Tuple[Tuple[int, Tuple[int, ...]], ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"C_{d}" for d in self.invariant_factors)


def units(m: ModLike) -> list[int]:
    n = as_modulus(m).n
    return [x for x in range(1, n) if math.gcd(x, n) == 1]


@lru_cache(maxsize=256)
def _order_table(n: int) -> np.ndarray:
    m = as_modulus(n)
    table = _backend.order_table(n, m.lam, m.lam_primes)
    table.setflags(write=False)
    return table


def order_table(m: ModLike) -> np.ndarray:
    """Orders of every residue mod n; entry 0 marks a non-unit."""
    return _order_table(as_modulus(m).n)


def _component_orders(p: int, e: int) -> Tuple[int, ...]:
    if p == 2:
        if e == 1:
            return ()
        if e == 2:
            return (2,)
        return (2, 2 ** (e - 2))
    return ((p - 1) * p ** (e - 1),)


def group_structure(m: ModLike) -> GroupStructure:
    """Invariant-factor form of U_n built from its prime-power components."""
    m = as_modulus(m)
    components = tuple((p**e, _component_orders(p, e)) for p, e in m.factorization)
    # prime -> exponents of that prime across all cyclic pieces
    by_prime: dict[int, list[int]] = {}
    for _, orders in components:
        for d in orders:
            for ell, a in factorize(d):
                by_prime.setdefault(ell, []).append(a)
    r = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * r
    for ell, exps in by_prime.items():
        exps.sort(reverse=True)
        for i, a in enumerate(exps):
            factors[r - 1 - i] *= ell**a
    return GroupStructure(tuple(factors), components)


def _as_generators(m: Modulus, gens) -> Tuple[list[int], list[int]]:
    values, orders = [], []
    for g in gens:
        x = g.generator if isinstance(g, CyclicFactor) else int(g)
        x %= m.n
        if math.gcd(x, m.n) != 1:
            raise NotAUnitError(f"{x} is not a unit mod {m.n}")
        o = order_mod(x, m)
        if isinstance(g, CyclicFactor) and g.order != o:
            raise ValueError(f"{g} claims order {g.order} but ord_{m.n}({x}) = {o}")
        values.append(x)
        orders.append(o)
    return values, orders


def is_direct_product(m: ModLike, gens: Sequence[Union[int, CyclicFactor]]) -> bool:
    """True iff U_n is the internal direct product of the cyclic groups <g_i>.

    Needs prod(orders) == phi(n) and the map (e_1..e_r) -> prod g_i^e_i to be
    injective on the exponent box; the check stops at the first repeat.
    """
    m = as_modulus(m)
    if len(gens) > MAX_FACTORS:
        raise ValueError(f"at most {MAX_FACTORS} factors are supported")
    values, orders = _as_generators(m, gens)
    if math.prod(orders) != m.phi:
        return False
    if m.n == 2:
        return True
    return _backend.direct_product(m.n, values, orders)


def subgroup_order(m: ModLike, gens: Sequence[int]) -> int:
    """Size of the subgroup generated by ``gens``, by closure."""
    m = as_modulus(m)
    n = m.n
    values, _ = _as_generators(m, gens)
    elems = {1 % n}
    frontier = [1 % n]
    while frontier:
        nxt = []
        for a in frontier:
            for g in values:
                b = a * g % n
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(elems)


def factors_of(m: ModLike, gens: Sequence[int]) -> Tuple[CyclicFactor, ...]:
    m = as_modulus(m)
    table = order_table(m)
    out = []
    for g in gens:
        g %= m.n
        o = int(table[g])
        if o == 0:
            raise NotAUnitError(f"{g} is not a unit mod {m.n}")
        out.append(CyclicFactor(g, o))
    return tuple(out)
