"""Finite fields GF(p^k) and 3AP decompositions of their multiplicative groups.

Elements are coded as integers: the coefficient vector (c_0, ..., c_{k-1})
of c_0 + c_1 z + ... in base p.  A field is built from a monic polynomial
whose root z must be primitive; exp/log tables then make every
multiplicative question a lookup.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .arith import RangeError, factorize, is_prime, primitive_root

MAX_FIELD_ORDER = 100_000

# Conway polynomials for the fields with known 3AP decompositions,
# constant term first, leading 1 included.  Signs are normalised mod p.
CONWAY = {
    (11, 2): (2, 7, 1),       # x^2 + 7x + 2
    (11, 3): (9, 2, 0, 1),    # x^3 + 2x + 9
    (19, 2): (2, 18, 1),      # x^2 - x + 2
    (19, 3): (17, 4, 0, 1),   # x^3 + 4x - 2
    (23, 2): (5, 21, 1),      # x^2 - 2x + 5
    (29, 2): (2, 24, 1),      # x^2 - 5x + 2
}


class CharacteristicError(ValueError):
    """Characteristic 2: a field with no 3-term arithmetic progressions."""


class ConstructionError(ValueError):
    """The defining polynomial is unusable (wrong shape, reducible, or imprimitive)."""


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    poly: Tuple[int, ...]  # monic, constant term first, length k + 1

    @property
    def q(self) -> int:
        return self.p**self.k

    def poly_str(self) -> str:
        terms = []
        for i in range(self.k, -1, -1):
            c = self.poly[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i > 0) else str(c)
            terms.append(coef + mono)
        return " + ".join(terms)


@dataclass(frozen=True)
class FieldElement:
    field: "Field"
    code: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits[self.code])

    @property
    def log(self) -> Optional[int]:
        if self.code == 0:
            return None
        return int(self.field.log[self.code])

    @property
    def order(self) -> int:
        return int(self.field.order[self.code])

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __str__(self):
        return "0" if self.code == 0 else f"z^{self.log}"

    def __repr__(self):
        return f"FieldElement({self.field.spec.p}^{self.field.spec.k}, {self})"


class Field:
    """GF(q) with exp/log/order tables; immutable after construction."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        p, k, q = spec.p, spec.k, spec.q
        self.p, self.k, self.q = p, k, q
        codes = np.arange(q, dtype=np.int64)
        self.weights = p ** np.arange(k, dtype=np.int64)
        self.digits = (codes[:, None] // self.weights) % p
        self.exp = np.zeros(q - 1, dtype=np.int64)
        self.log = np.full(q, -1, dtype=np.int64)
        cur = [1] + [0] * (k - 1)
        low = [(-c) % p for c in spec.poly[:k]]
        for e in range(q - 1):
            code = sum(c * w for c, w in zip(cur, self.weights.tolist()))
            if self.log[code] != -1:
                raise ConstructionError(f"root of {spec.poly_str()} has order {e}, not {q - 1}")
            self.exp[e] = code
            self.log[code] = e
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(a + top * b) % p for a, b in zip(cur, low)]
        logs = self.log[1:]
        self.order = np.zeros(q, dtype=np.int64)
        self.order[1:] = (q - 1) // np.gcd(logs, q - 1)
        for arr in (self.digits, self.exp, self.log, self.order):
            arr.setflags(write=False)

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, int(code))

    def zeta_pow(self, e: int) -> FieldElement:
        return FieldElement(self, int(self.exp[e % (self.q - 1)]))

    def add(self, a, b):
        """Coefficient-wise sum of coded elements (scalars or arrays)."""
        s = (self.digits[a] + self.digits[b]) % self.p
        return s @ self.weights

    def neg(self, a):
        return ((-self.digits[a]) % self.p) @ self.weights

    def scale(self, a, s: int):
        return ((self.digits[a] * s) % self.p) @ self.weights

    def elements_of_order(self, m: int) -> np.ndarray:
        n1 = self.q - 1
        js = np.arange(m, dtype=np.int64)
        js = js[np.gcd(js, m) == 1]
        return self.exp[(n1 // m) * js]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def in_prime_subfield(self, a: int) -> bool:
        return int(a) < self.p

    def __repr__(self):
        return f"Field(GF({self.p}^{self.k}), {self.spec.poly_str()})"


def _polymod(a: List[int], b: Sequence[int], p: int) -> List[int]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a.pop()
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= k/2."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            rem = _polymod(list(poly), list(low) + [1], p)
            if not any(rem):
                return False
    return True


def _polymulmod(a: List[int], b: List[int], f: Sequence[int], p: int) -> List[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod(prod, f, p)


def _x_power(e: int, f: Sequence[int], p: int) -> List[int]:
    result, base = [1], [0, 1]
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(poly: Sequence[int], p: int) -> bool:
    """Irreducible with a root of multiplicative order p^k - 1."""
    k = len(poly) - 1
    if poly[0] % p == 0 or not is_irreducible(poly, p):
        return False
    n1 = p**k - 1
    for ell, _ in factorize(n1):
        r = _x_power(n1 // ell, poly, p)
        while r and r[-1] == 0:
            r.pop()
        if r == [1]:
            return False
    return True


def find_primitive_polynomial(p: int, k: int) -> Tuple[int, ...]:
    """First primitive monic polynomial in lexicographic order of (c_{k-1}, ..., c_0).

    A convenient defining polynomial; not in general the Conway polynomial.
    """
    for high in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(high)) + (1,)
        if is_primitive(coeffs, p):
            return coeffs
    raise ConstructionError(f"no primitive polynomial of degree {k} mod {p}")


def _normalise(p: int, k: int, poly: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if poly is None:
        if k == 1:
            return ((-primitive_root(p)) % p, 1)
        if (p, k) not in CONWAY:
            raise ConstructionError(f"no built-in polynomial for GF({p}^{k}); supply one")
        return CONWAY[(p, k)]
    coeffs = [int(c) % p for c in poly]
    if len(coeffs) == k:
        coeffs.append(1)
    if len(coeffs) != k + 1 or coeffs[-1] != 1:
        raise ConstructionError(f"expected a monic polynomial of degree {k}, got {list(poly)}")
    return tuple(coeffs)


_FIELDS: Dict[FieldSpec, Field] = {}


def build_field(p: int, k: int = 1, poly: Optional[Sequence[int]] = None) -> Field:
    """Construct GF(p^k) from ``poly`` (constant term first) or a built-in one."""
    if p == 2:
        raise CharacteristicError("characteristic 2 has no 3-term arithmetic progressions")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be >= 1")
    if p**k > MAX_FIELD_ORDER:
        raise RangeError(f"GF({p}^{k}) exceeds {MAX_FIELD_ORDER} elements")
    coeffs = _normalise(p, k, poly)
    if coeffs[0] == 0 or not is_irreducible(coeffs, p):
        raise ConstructionError(f"x-polynomial {list(coeffs)} is reducible mod {p}")
    spec = FieldSpec(p, k, coeffs)
    if spec not in _FIELDS:
        _FIELDS[spec] = Field(spec)
    return _FIELDS[spec]


# -- 3AP search ---------------------------------------------------------------

@dataclass(frozen=True)
class FieldDecomposition:
    field: Field
    first: int   # codes
    diff: int
    elements: Tuple[int, int, int]
    orders: Tuple[int, int, int]

    @property
    def logs(self) -> Tuple[int, ...]:
        return tuple(int(self.field.log[c]) for c in self.elements)

    @property
    def is_weak(self) -> bool:
        return 1 in self.orders

    def __str__(self):
        f = self.field
        body = " x ".join(f"<z^{e}>_{o}" for e, o in zip(self.logs, self.orders))
        return f"GF({f.p}^{f.k})* = {body}"

    def to_dict(self) -> dict:
        return {
            "q": self.field.q,
            "logs": list(self.logs),
            "orders": list(self.orders),
            "coefficients": [[int(c) for c in self.field.digits[e]] for e in self.elements],
        }


def _canonical_diffs(f: Field) -> np.ndarray:
    codes = np.arange(1, f.q, dtype=np.int64)
    return codes[codes < f.neg(codes)]


def _search_diffs(f: Field, diffs: np.ndarray, allow_weak: bool) -> List[Tuple[int, int]]:
    xs = np.arange(1, f.q, dtype=np.int64)
    n1 = f.q - 1
    hits = []
    for d in diffs.tolist():
        ys = f.add(xs, d)
        zs = f.add(ys, d)
        ox, oy, oz = f.order[xs], f.order[ys], f.order[zs]
        ok = (oy > 0) & (oz > 0) & (ox * oy * oz == n1)
        ok &= (np.gcd(ox, oy) == 1) & (np.gcd(oy, oz) == 1) & (np.gcd(ox, oz) == 1)
        if not allow_weak:
            ok &= (ox > 1) & (oy > 1) & (oz > 1)
        hits.extend((int(x), d) for x in xs[ok])
    return hits


def _search_orders(f: Field, allow_weak: bool) -> List[Tuple[int, int]]:
    # In a cyclic group the factor orders (a, b, c) are pairwise coprime with
    # product q - 1.  Enumerate the two non-largest factors u, v and solve for
    # the largest one w, placed last ([u, v, 2v - u]) or in the middle.
    n1 = f.q - 1
    divs = [dv for dv in range(1, n1 + 1) if n1 % dv == 0]
    half = (f.p + 1) // 2
    found = set()
    for a in divs:
        for b in divs:
            if a == b or math.gcd(a, b) != 1 or n1 % (a * b):
                continue
            c = n1 // (a * b)
            if math.gcd(c, a * b) != 1 or c <= max(a, b):
                continue
            if not allow_weak and 1 in (a, b):
                continue
            us = f.elements_of_order(a)
            vs = f.elements_of_order(b)
            uu, vv = (arr.ravel() for arr in np.meshgrid(us, vs, indexing="ij"))
            last = f.add(f.scale(vv, 2), f.neg(uu))
            mid = f.scale(f.add(uu, vv), half)
            ok = f.order[last] == c
            found.update(zip(uu[ok].tolist(), vv[ok].tolist()))
            ok = f.order[mid] == c
            found.update(zip(uu[ok].tolist(), mid[ok].tolist()))
    hits = []
    for x, y in found:
        d = int(f.add(y, f.neg(x)))
        nd = int(f.neg(d))
        if d < nd:
            hits.append((x, d))
        else:
            z = int(f.add(y, d))
            hits.append((z, nd))
    return sorted(set(hits))


def find_3ap_field(f: Field, allow_weak: bool = False, orders: Optional[Sequence[int]] = None,
                   one_per_order_set: bool = False, threads: int = 1,
                   method: str = "orders") -> List[FieldDecomposition]:
    """All 3AP decompositions of GF(q)^x, each reported once up to reversal.

    The group is cyclic, so a triple is a decomposition iff its orders are
    pairwise coprime with product q - 1.  ``method="orders"`` builds triples
    from elements of prescribed orders; ``method="sweep"`` scans every
    (x, d) and is kept as a cross-check.  ``orders`` keeps only triples with
    that order multiset; ``one_per_order_set`` keeps the first triple of each
    multiset in (orders, logs) order.
    """
    if method == "orders":
        hits = _search_orders(f, allow_weak)
    elif method == "sweep":
        diffs = _canonical_diffs(f)
        threads = max(1, int(threads))
        if threads == 1:
            hits = _search_diffs(f, diffs, allow_weak)
        else:
            chunks = np.array_split(diffs, threads)
            with ThreadPoolExecutor(threads) as ex:
                parts = ex.map(lambda c: _search_diffs(f, c, allow_weak), chunks)
            hits = [h for part in parts for h in part]
    else:
        raise ValueError(f"unknown method {method!r}")
    out = []
    for x, d in hits:
        y = int(f.add(x, d))
        z = int(f.add(y, d))
        elems = (x, y, z)
        out.append(FieldDecomposition(f, x, d, elems, tuple(int(f.order[e]) for e in elems)))
    if orders is not None:
        want = sorted(orders)
        out = [r for r in out if sorted(r.orders) == want]
    out.sort(key=lambda r: (r.diff, r.first))
    if one_per_order_set:
        seen, keep = set(), []
        for r in sorted(out, key=lambda r: (sorted(r.orders), r.orders, r.logs)):
            key = tuple(sorted(r.orders))
            if key not in seen:
                seen.add(key)
                keep.append(r)
        out = keep
    return out


def decomposition_from_logs(f: Field, logs: Sequence[int]) -> Optional[FieldDecomposition]:
    """The decomposition with generators z^e for the given exponents, or None."""
    elems = tuple(int(f.exp[e % (f.q - 1)]) for e in logs)
    x, y, z = elems
    d = int(f.add(y, f.neg(x)))
    if d == 0 or int(f.add(y, d)) != z:
        return None
    ords = tuple(int(f.order[e]) for e in elems)
    if math.prod(ords) != f.q - 1 or any(math.gcd(a, b) != 1 for a, b in itertools.combinations(ords, 2)):
        return None
    return FieldDecomposition(f, x, d, elems, ords)


def prime_subfield_argument_check(f: Field) -> bool:
    """Every decomposition with orders {2, 3, (q-1)/6} lies in the prime subfield.

    Vacuously true when (q-1)/6 is not an integer coprime to 6.
    """
    n1 = f.q - 1
    if n1 % 6 or math.gcd(n1 // 6, 6) != 1:
        return True
    decs = find_3ap_field(f, orders=(2, 3, n1 // 6))
    return all(f.in_prime_subfield(e) for d in decs for e in d.elements)


def subfield_family_moduli(limit: int) -> List[Tuple[int, int]]:
    """(p, k) with q = p^k <= limit, q = 7 or 31 (mod 36).  Each has p = 7 or 31 (mod 36)."""
    out = []
    for p in range(3, limit + 1, 2):
        if not is_prime(p):
            continue
        k, q = 1, p
        while q <= limit:
            if q % 36 in (7, 31):
                out.append((p, k))
            k += 1
            q *= p
    return out


def frobenius(d: FieldDecomposition) -> FieldDecomposition:
    """Image of a decomposition under x -> x^p."""
    f = d.field
    elems = tuple(int(f.exp[(int(f.log[e]) * f.p) % (f.q - 1)]) for e in d.elements)
    diff = int(f.add(elems[1], f.neg(elems[0])))
    return FieldDecomposition(f, elems[0], diff, elems, tuple(int(f.order[e]) for e in elems))


def group_order_factors(f: Field) -> Tuple[Tuple[int, int], ...]:
    return factorize(f.q - 1)
