"""Constructive families of 3AP decompositions for prime and composite n.

Each ``thm_*`` function returns a :class:`TheoremOutcome` (or a list of
them) instead of raising when the hypothesis fails, so that range scans
can tabulate coverage.  Calling one outside its congruence family raises
:class:`FamilyError` unless ``strict=False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .arith import (
    ModLike, Modulus, as_modulus, crt_combine, factorize, inverse_mod, is_prime,
    order_mod, sqrt_mod_prime,
)
from .search import ApDecomposition, find_3ap, make_decomposition
from .units import order_table

APPLIES = "applies"
HYPOTHESIS_FAILED = "hypothesis_failed"
OUT_OF_FAMILY = "out_of_family"


class FamilyError(ValueError):
    """The modulus lies outside the family a construction is stated for."""


class InvariantViolation(AssertionError):
    """A computed object contradicts a proven statement."""


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of x^2 + 3x + 3 mod a prime, labelled by the parity of their order."""

    n: int
    x1: int
    x2: int

    @property
    def y1(self) -> int:
        return (self.x1 + 1) % self.n

    @property
    def y2(self) -> int:
        return (self.x2 + 1) % self.n


@dataclass
class TheoremOutcome:
    theorem: str
    n: int
    applicability: str
    witness: Optional[ApDecomposition] = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def applies(self) -> bool:
        return self.applicability == APPLIES

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "applicability": self.applicability,
            "witness": self.witness.to_dict() if self.witness else None,
            "diagnostics": self.diagnostics,
        }


def _require_prime_class(m: Modulus, classes, modulus: int, what: str, minimum: int = 0):
    n = m.n
    if not is_prime(n) or n % modulus not in classes or n <= minimum:
        raise FamilyError(
            f"{what} needs a prime n > {minimum} with n mod {modulus} in {sorted(classes)}; got {n}"
        )


def _out(theorem: str, m: Modulus, strict: bool, exc: FamilyError) -> TheoremOutcome:
    if strict:
        raise exc
    return TheoremOutcome(theorem, m.n, OUT_OF_FAMILY, diagnostics={"reason": str(exc)})


def _witness(m: Modulus, gens) -> ApDecomposition:
    d = make_decomposition(m, gens)  # raises if not a decomposition
    return d


def _roots_of_quadratic_mod_prime(p: int) -> List[int]:
    r = sqrt_mod_prime(-3, p)
    if r is None:
        return []
    inv2 = inverse_mod(2, p)
    return sorted({(-3 + s) * inv2 % p for s in r})


def quadratic_roots(m: ModLike) -> QuadraticRoots:
    """Roots of x^2 + 3x + 3 for prime n = 7 or 31 (mod 36).

    x1 is the root of odd order, x2 the root of even order.
    """
    m = as_modulus(m)
    _require_prime_class(m, {7, 31}, 36, "quadratic_roots")
    n = m.n
    roots = _roots_of_quadratic_mod_prime(n)
    if len(roots) != 2:
        raise InvariantViolation(f"x^2+3x+3 should have two roots mod {n}")
    a, b = roots
    if order_mod(a, m) % 2:
        x1, x2 = a, b
    else:
        x1, x2 = b, a
    if order_mod(x1, m) % 2 == 0 or order_mod(x2, m) % 2:
        raise InvariantViolation(f"roots mod {n} do not split into odd/even order")
    return QuadraticRoots(n, x1, x2)


def _prime_36_family(m: Modulus, theorem: str, strict: bool, minimum: int):
    try:
        _require_prime_class(m, {7, 31}, 36, theorem, minimum)
    except FamilyError as exc:
        return _out(theorem, m, strict, exc)
    return None


def thm_2_1(m: ModLike, strict: bool = True) -> TheoremOutcome:
    """<-x1-2>_3 x <-1>_2 x <x1>_m when ord(x1) = (n-1)/6."""
    m = as_modulus(m)
    bad = _prime_36_family(m, "2.1", strict, 7)
    if bad:
        return bad
    n = m.n
    r = quadratic_roots(m)
    mm = (n - 1) // 6
    diag = {"x1": r.x1, "x2": r.x2, "ord_x1": order_mod(r.x1, m), "ord_x2": order_mod(r.x2, m)}
    if diag["ord_x1"] != mm:
        return TheoremOutcome("2.1", n, HYPOTHESIS_FAILED, diagnostics=diag)
    w = _witness(m, [-r.x1 - 2, -1, r.x1])
    return TheoremOutcome("2.1", n, APPLIES, w, diag)


def thm_2_2(m: ModLike, strict: bool = True) -> TheoremOutcome:
    """<2x2+3>_m x <x2+1>_3 x <-1>_2 when ord(x1) = (n-1)/2 and ord(x2) = n-1."""
    m = as_modulus(m)
    bad = _prime_36_family(m, "2.2", strict, 7)
    if bad:
        return bad
    n = m.n
    r = quadratic_roots(m)
    diag = {"x1": r.x1, "x2": r.x2, "ord_x1": order_mod(r.x1, m), "ord_x2": order_mod(r.x2, m)}
    if diag["ord_x1"] != (n - 1) // 2 or diag["ord_x2"] != n - 1:
        return TheoremOutcome("2.2", n, HYPOTHESIS_FAILED, diagnostics=diag)
    w = _witness(m, [2 * r.x2 + 3, r.x2 + 1, -1])
    return TheoremOutcome("2.2", n, APPLIES, w, diag)


def thm_2_3(m: ModLike, strict: bool = True) -> TheoremOutcome:
    """<z+1>_3 x <z/2>_m x <-1>_2 for a root z with ord(z/2) = (n-1)/6.

    When both roots qualify the witness uses x1; ``diagnostics['z_roots']``
    lists every qualifying label.
    """
    m = as_modulus(m)
    bad = _prime_36_family(m, "2.3", strict, 0)
    if bad:
        return bad
    n = m.n
    r = quadratic_roots(m)
    mm = (n - 1) // 6
    half = inverse_mod(2, n)
    good = [lab for lab, z in (("x1", r.x1), ("x2", r.x2)) if order_mod(z * half, m) == mm]
    diag = {"x1": r.x1, "x2": r.x2, "z_roots": good}
    if not good:
        return TheoremOutcome("2.3", n, HYPOTHESIS_FAILED, diagnostics=diag)
    z = r.x1 if good[0] == "x1" else r.x2
    diag["z"] = good[0]
    w = _witness(m, [z + 1, z * half, -1])
    return TheoremOutcome("2.3", n, APPLIES, w, diag)


def thm_2_4_classify(m: ModLike, d: ApDecomposition) -> str:
    """Which of the constructions 2.1-2.3 produces ``d``.

    ``d`` must have orders {2, 3, (n-1)/6}.  The third generator is
    -x_i-3, 2x_i+3 or x_i/2 where x_i + 1 is the order-3 generator.
    """
    m = as_modulus(m)
    n = m.n
    if not is_prime(n) or sorted(d.orders) != sorted([2, 3, (n - 1) // 6]):
        raise FamilyError(f"{d} does not have orders {{2, 3, (n-1)/6}} for prime n")
    gens = dict(zip(d.orders, d.generators))
    y = gens[3]
    g = gens[(n - 1) // 6]
    if gens[2] != n - 1:
        raise InvariantViolation(f"order-2 generator of {d} is not -1")
    xi_ = (y - 1) % n
    if (xi_ * xi_ + 3 * xi_ + 3) % n:
        raise InvariantViolation(f"{y} - 1 is not a root of x^2+3x+3 mod {n}")
    if g == (-xi_ - 3) % n:
        return "2.1"
    if g == (2 * xi_ + 3) % n:
        return "2.2"
    if g == xi_ * inverse_mod(2, n) % n:
        return "2.3"
    raise InvariantViolation(f"{d} matches none of the constructions 2.1-2.3")


def _fourth_roots_of_unity_pm(n: int) -> List[int]:
    r = sqrt_mod_prime(-1, n)
    return list(r) if r else []


def _prime_144_family(m: Modulus, theorem: str, strict: bool):
    try:
        _require_prime_class(m, {13, 61, 85, 133}, 144, theorem, 13)
    except FamilyError as exc:
        return _out(theorem, m, strict, exc)
    return None


def _thm_2_5_6(m: ModLike, strict: bool, theorem: str) -> List[TheoremOutcome]:
    m = as_modulus(m)
    bad = _prime_144_family(m, theorem, strict)
    if bad:
        return [bad]
    n = m.n
    mu = (n - 1) // 12
    out = []
    for x in _roots_of_quadratic_mod_prime(n):
        for i in _fourth_roots_of_unity_pm(n):
            k = (i - x - 1) % n
            far = (x + 1 + 2 * k) if theorem == "2.5" else (x + 1 - k)
            far %= n
            if far == 0 or order_mod(far, m) != mu:
                continue
            if theorem == "2.5":
                gens = [x + 1, x + 1 + k, far]
            else:
                gens = [far, x + 1, x + 1 + k]
            diag = {"x": x, "k": k, "ord_x": order_mod(x, m)}
            out.append(TheoremOutcome(theorem, n, APPLIES, _witness(m, gens), diag))
    if not out:
        out.append(TheoremOutcome(theorem, n, HYPOTHESIS_FAILED))
    return out


def thm_2_5(m: ModLike, strict: bool = True) -> List[TheoremOutcome]:
    """<x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu for every qualifying root x and k."""
    return _thm_2_5_6(m, strict, "2.5")


def thm_2_6(m: ModLike, strict: bool = True) -> List[TheoremOutcome]:
    """<x+1-k>_mu x <x+1>_3 x <x+1+k>_4 for every qualifying root x and k."""
    return _thm_2_5_6(m, strict, "2.6")


def order5_elements(m: ModLike) -> List[int]:
    m = as_modulus(m)
    table = order_table(m)
    return [int(x) for x in range(1, m.n) if table[x] == 5]


def type_2_3(m: ModLike, variant: str, strict: bool = True) -> List[TheoremOutcome]:
    """Decompositions with orders {2, 5, (n-1)/10} built from an order-5 element.

    (a) <-z-2>_5 x <-1>_2 x <z>_nu;  (b) <2z+1>_nu x <z>_5 x <-1>_2;
    (c) <2z+1>_5 x <z>_nu x <-1>_2.
    """
    m = as_modulus(m)
    theorem = f"2.3({variant})"
    if variant not in ("a", "b", "c"):
        raise ValueError(f"variant must be a, b or c, got {variant!r}")
    try:
        _require_prime_class(m, {11, 31, 71, 91}, 100, theorem, 11)
    except FamilyError as exc:
        return [_out(theorem, m, strict, exc)]
    n = m.n
    nu = (n - 1) // 10
    table = order_table(m)
    half = inverse_mod(2, n)
    out = []
    for w in order5_elements(m):
        if variant == "a":
            z = (-w - 2) % n
            gens, check = [w, -1, z], z
        elif variant == "b":
            z = w
            gens, check = [2 * z + 1, z, -1], (2 * z + 1) % n
        else:
            z = (w - 1) * half % n
            gens, check = [w, z, -1], z
        if check == 0 or table[check] != nu:
            continue
        out.append(TheoremOutcome(theorem, n, APPLIES, _witness(m, gens), {"order5": w}))
    return out


def thm_4_1_check(p: int) -> bool:
    """No (weak or strong) 3AP decomposition of U_{3p} for a prime p > 3."""
    if not is_prime(p) or p <= 3:
        raise FamilyError(f"p must be a prime > 3, got {p}")
    return not find_3ap(3 * p, allow_weak=True)


def thm_4_2_check(n: int) -> bool:
    """No decomposition <a> x <a+m> x <a+2m> of U_n when n = 3m."""
    if n % 3 or n < 3:
        raise FamilyError(f"n must be a multiple of 3, got {n}")
    m = as_modulus(n)
    step = n // 3
    table = order_table(m)
    for a in range(1, n):
        gens = [a, a + step, a + 2 * step]
        gens = [g % n for g in gens]
        if any(table[g] == 0 for g in gens):
            continue
        if len(set(gens)) < 3:
            continue
        try:
            make_decomposition(m, gens)
        except ValueError:
            continue
        return False
    return True


def thm_4_4(p: int, q: int, strict: bool = True) -> TheoremOutcome:
    """U_pq = <-x-2> x <-1> x <x> with x = 1 (mod p), -3 (mod q)."""
    theorem = "4.4"
    n = p * q
    if not (is_prime(p) and is_prime(q) and p > 3 and q > 3 and p != q and p % 4 == 3):
        exc = FamilyError(f"need distinct primes p, q > 3 with p = 3 (mod 4); got p={p}, q={q}")
        if strict:
            raise exc
        return TheoremOutcome(theorem, n, OUT_OF_FAMILY, diagnostics={"reason": str(exc)})
    ord_p = order_mod(-3, p)
    ord_q = order_mod(-3, q)
    diag = {"p": p, "q": q, "ord_p(-3)": ord_p, "ord_q(-3)": ord_q}
    if ord_p != (p - 1) // 2 or ord_q != q - 1:
        return TheoremOutcome(theorem, n, HYPOTHESIS_FAILED, diagnostics=diag)
    x = crt_combine([(1, p), (-3 % q, q)])
    w = _witness(n, [-x - 2, -1, x])
    source = [g % p for g in w.generators]
    if source != [p - 3, p - 1, 1]:
        raise InvariantViolation(f"{w} does not reduce to (-3, -1, 1) mod {p}")
    diag["x"] = x
    diag["source"] = str(make_decomposition(p, source))
    return TheoremOutcome(theorem, n, APPLIES, w, diag)


def negation_pair_family(n: int) -> Optional[Tuple[int, int]]:
    """(p, q) when n = pq, p = q = 1 (mod 6), gcd(p-1, q-1) = 6; else None."""
    f = factorize(n)
    if len(f) != 2 or any(e != 1 for _, e in f):
        return None
    (p, _), (q, _) = f
    if p % 6 != 1 or q % 6 != 1 or math.gcd(p - 1, q - 1) != 6:
        return None
    return p, q


def eq9_search(m: ModLike) -> List[Tuple[ApDecomposition, ApDecomposition]]:
    """Pairs <2x+3>_m x <x+1>_3 x <-1>_2 = <-2x-3>_m x <-x-2>_3 x <-1>_2.

    x runs over the (up to four) roots of x^2+3x+3 mod n; each witness is
    paired with the one from the root -3-x.
    """
    m = as_modulus(m)
    n = m.n
    pq = negation_pair_family(n)
    if pq is None:
        raise FamilyError(f"{n} is not pq with p = q = 1 (mod 6) and gcd(p-1, q-1) = 6")
    p, q = pq
    roots = sorted(
        crt_combine([(a, p), (b, q)])
        for a in _roots_of_quadratic_mod_prime(p)
        for b in _roots_of_quadratic_mod_prime(q)
    )
    found = {}
    for x in roots:
        try:
            found[x] = make_decomposition(m, [2 * x + 3, x + 1, -1])
        except ValueError:
            continue
    pairs = []
    done = set()
    for x in roots:
        mate = (-3 - x) % n
        if x in done or x not in found:
            continue
        done.update((x, mate))
        if mate not in found:
            raise InvariantViolation(f"mate of {found[x]} is not a decomposition")
        pairs.append((found[x], found[mate]))
    return pairs


def weak_6p_class(m: ModLike) -> List[ApDecomposition]:
    """Weak decompositions of prime U_n with orders {1, 6, p'} for primes p' > 3."""
    m = as_modulus(m)
    n = m.n
    if not is_prime(n) or (n - 1) % 6:
        return []
    ps = [p for p, _ in factorize((n - 1) // 6) if p > 3]
    out = []
    for d in find_3ap(m, allow_weak=True):
        if not d.is_weak:
            continue
        for p in ps:
            if sorted(d.orders) == [1, 6, p]:
                _check_6p_identity(d)
                out.append(d)
    return out


def _check_6p_identity(d: ApDecomposition):
    # a = (c-1)^-1 whenever the trivial factor sits between orders 6 and p
    for e in (d, d.reversed()):
        if e.orders[1] == 1 and e.orders[0] == 6:
            a, _, c = e.generators
            if a != inverse_mod(c - 1, e.n):
                raise InvariantViolation(f"{e}: expected a = (c-1)^-1")


def table2_classify(d: ApDecomposition, q: int) -> str:
    """Type A, B or C of a lift from a weak decomposition of U_q, else '-'.

    The generator congruent to 1 mod q is the lifted identity.  Without an
    order-4 generator in the source decomposition the type is '-'.  In the
    middle it is type B; otherwise, oriented so it comes first, type A when
    the middle source order is 4 and C when the last one is.
    """
    n = d.n
    if n % q:
        raise ValueError(f"{q} does not divide {n}")
    red = [g % q for g in d.generators]
    if red.count(1) != 1:
        raise ValueError(f"{d} is not lifted from a weak decomposition of U_{q}")
    src_orders = [order_mod(g, q) for g in red]
    if 4 not in src_orders:
        return "-"
    pos = red.index(1)
    if pos == 1:
        return "B"
    if pos == 2:
        src_orders = src_orders[::-1]
    if src_orders[1] == 4:
        return "A"
    if src_orders[2] == 4:
        return "C"
    return "-"
