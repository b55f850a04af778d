"""Lifting AP decompositions from U_n to U_np for a prime p.

A lift keeps every generator's residue mod n.  The behaviour splits by how
p meets n: p^2 | n (case 1), p || n (case 2, refined by how many factor
orders p divides), and p coprime to n (case 3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .arith import ModLike, RangeError, as_modulus, is_ap, is_prime, order_mod
from .search import ApDecomposition, find_3ap
from .units import factors_of, is_direct_product, order_table

MAX_LIFT_MODULUS = 2_000_000


class WrongSubcaseError(ValueError):
    """Productivity is only defined when no factor order is divisible by p."""


class ProductivityError(ValueError):
    """An unproductive decomposition cannot be lifted to a prime power."""


class LiftPrimeError(ValueError):
    """Lifts are only analysed for an odd prime index."""


@dataclass(frozen=True)
class LiftCase:
    case: int
    divisible: Optional[int] = None  # case 2: number of factor orders divisible by p

    @property
    def subcase(self) -> Optional[str]:
        if self.case != 2:
            return None
        return f"2.{self.divisible + 1}"

    @property
    def label(self) -> str:
        return self.subcase or f"{self.case}"


@dataclass
class LiftReport:
    source: ApDecomposition
    p: int
    case: LiftCase
    special_lifts: Tuple[Optional[int], ...]
    spurious_lifts: Optional[Tuple[int, ...]] = None
    spurious_in_ap: Optional[bool] = None
    productive: Optional[bool] = None
    results: List[ApDecomposition] = field(default_factory=list)

    @property
    def strong(self) -> List[ApDecomposition]:
        return [d for d in self.results if not d.is_weak]

    @property
    def weak(self) -> List[ApDecomposition]:
        return [d for d in self.results if d.is_weak]

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "p": self.p,
            "case": self.case.label,
            "special_lifts": list(self.special_lifts),
            "spurious_lifts": list(self.spurious_lifts) if self.spurious_lifts else None,
            "spurious_in_ap": self.spurious_in_ap,
            "productive": self.productive,
            "results": [d.to_dict() for d in self.results],
        }


def _check_prime(p: int):
    if p == 2 or not is_prime(p):
        raise LiftPrimeError(f"lift index must be an odd prime, got {p}")


def _check_range(n: int):
    if n > MAX_LIFT_MODULUS:
        raise RangeError(f"lift target {n} exceeds {MAX_LIFT_MODULUS}")


def lifts_of_element(x: int, m: ModLike, p: int) -> List[Tuple[int, int]]:
    """All units x' = x (mod n) of U_np with their orders, ascending."""
    m = as_modulus(m)
    _check_prime(p)
    n = m.n
    big = n * p
    _check_range(big)
    x %= n
    if math.gcd(x, n) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    out = []
    for j in range(p):
        y = x + j * n
        if math.gcd(y, big) == 1:
            out.append((y, order_mod(y, big)))
    return out


def special_lift(x: int, m: ModLike, p: int) -> Optional[int]:
    """The unique lift preserving the order of x, if there is exactly one."""
    m = as_modulus(m)
    a = order_mod(x, m)
    keep = [y for y, o in lifts_of_element(x, m, p) if o == a]
    return keep[0] if len(keep) == 1 else None


def spurious_lift(x: int, n: int, p: int) -> int:
    """The lift of x to Z_np that is divisible by p (p coprime to n)."""
    return next(x % n + j * n for j in range(p) if (x % n + j * n) % p == 0)


def classify_case(d: ApDecomposition, p: int) -> LiftCase:
    _check_prime(p)
    n = d.n
    if n % (p * p) == 0:
        return LiftCase(1)
    if n % p == 0:
        return LiftCase(2, sum(1 for a in d.orders if a % p == 0))
    return LiftCase(3)


def is_productive(d: ApDecomposition, p: int) -> bool:
    """False iff the special lifts of the generators form an AP mod np."""
    case = classify_case(d, p)
    if case.case != 2 or case.divisible != 0:
        raise WrongSubcaseError(f"{d} with p={p} is in case {case.label}, not 2.1")
    specials = [special_lift(g, d.n, p) for g in d.generators]
    if any(s is None for s in specials):
        raise AssertionError(f"missing special lift for {d}, p={p}")
    return not is_ap(specials, d.n * p)


def lift_decompositions(d: ApDecomposition, p: int) -> LiftReport:
    """Every (possibly weak) AP decomposition of U_np reducing to ``d`` mod n."""
    _check_prime(p)
    n = d.n
    big = n * p
    _check_range(big)
    mbig = as_modulus(big)
    case = classify_case(d, p)
    table = order_table(mbig)
    specials = tuple(special_lift(g, n, p) for g in d.generators)
    report = LiftReport(d, p, case, specials)
    if case.case == 3:
        spur = tuple(spurious_lift(g, n, p) for g in d.generators)
        report.spurious_lifts = spur
        report.spurious_in_ap = is_ap(spur, big)
    if case.case == 2 and case.divisible == 0:
        report.productive = not is_ap(specials, big)
    length = len(d.generators)
    x, y = d.generators[0], d.generators[1]
    for i in range(p):
        x1 = x + i * n
        if table[x1 % big] == 0:
            continue
        for j in range(p):
            y1 = y + j * n
            step = (y1 - x1) % big
            gens = [(x1 + t * step) % big for t in range(length)]
            ords = [int(table[g]) for g in gens]
            if 0 in ords or ords.count(1) > 1 or math.prod(ords) != mbig.phi:
                continue
            if is_direct_product(mbig, gens):
                report.results.append(ApDecomposition(big, gens[0], step, factors_of(mbig, gens)))
    return report


def lift_to_prime_power(d: ApDecomposition, alpha: int, boost: Optional[int] = None) -> ApDecomposition:
    """Strong decomposition of U_{p^alpha} lifted from a productive one of U_p.

    After the first step one factor order has been multiplied by p; every
    later step multiplies that same factor again.  ``boost`` selects which
    factor grows when several first-step lifts are strong (default: the
    lowest index available).
    """
    p = d.n
    _check_prime(p)
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if alpha == 1:
        return d
    if not is_productive(d, p):
        raise ProductivityError(f"{d} is unproductive; special lifts are in AP mod {p * p}")
    first = lift_decompositions(d, p)
    options = []
    for r in first.strong:
        grown = [i for i, (a, b) in enumerate(zip(d.orders, r.orders)) if a != b]
        options.append((grown[0], r))
    options.sort(key=lambda t: t[0])
    if boost is not None:
        options = [t for t in options if t[0] == boost]
    if not options:
        raise ProductivityError(f"no strong first-step lift of {d} grows factor {boost}")
    cur = options[0][1]
    for _ in range(alpha - 2):
        nxt = lift_decompositions(cur, p).results
        if len(nxt) != 1:
            raise AssertionError(f"expected exactly one lift of {cur}, found {len(nxt)}")
        cur = nxt[0]
    return cur


# -- moduli n = k p^2 ----------------------------------------------------------

@dataclass(frozen=True)
class Table3Row:
    n: int
    k: int
    p: int
    total: int
    from_strong: int
    from_weak: int
    other: int
    star_strong: bool
    star_weak: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def kp2_moduli(limit: int) -> List[Tuple[int, int, int]]:
    """(n, k, p) with n = k p^2 <= limit, k and p distinct primes > 3."""
    out = []
    for p in range(5, math.isqrt(limit) + 1):
        if not is_prime(p):
            continue
        for k in range(5, limit // (p * p) + 1):
            if k != p and is_prime(k):
                out.append((k * p * p, k, p))
    return sorted(out)


def _all_unproductive(catalog: Sequence[ApDecomposition], p: int) -> bool:
    for d in catalog:
        c = classify_case(d, p)
        if c.case != 2 or c.divisible != 0 or is_productive(d, p):
            return False
    return True


def provenance(d: ApDecomposition, base: int) -> str:
    """'strong', 'weak' or 'other': what ``d`` reduces to modulo ``base``."""
    mb = as_modulus(base)
    red = [g % base for g in d.generators]
    table = order_table(mb)
    ords = [int(table[g]) for g in red]
    if ords.count(1) > 1 or math.prod(ords) != mb.phi or len(set(red)) < len(red):
        return "other"
    if not is_direct_product(mb, red):
        return "other"
    return "weak" if 1 in ords else "strong"


def table3_row(n: int, k: int, p: int) -> Table3Row:
    base = k * p
    decs = find_3ap(n)
    tally = {"strong": 0, "weak": 0, "other": 0}
    for d in decs:
        tally[provenance(d, base)] += 1
    cat = find_3ap(base, allow_weak=True)
    strong_cat = [d for d in cat if not d.is_weak]
    weak_cat = [d for d in cat if d.is_weak]
    star_s = bool(strong_cat) and tally["strong"] == 0 and _all_unproductive(strong_cat, p)
    star_w = bool(weak_cat) and tally["weak"] == 0 and _all_unproductive(weak_cat, p)
    return Table3Row(n, k, p, len(decs), tally["strong"], tally["weak"], tally["other"], star_s, star_w)


def table3_report(limit: int = 1000) -> List[Table3Row]:
    if limit < 175:
        raise ValueError("limit must be at least 175")
    return [table3_row(n, k, p) for n, k, p in kp2_moduli(limit)]
