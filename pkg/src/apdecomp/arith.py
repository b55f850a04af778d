"""Integer and modular arithmetic used throughout the package.

Everything here works on ordinary Python ints.  The supported range is
``n <= MAX_N``; factorization is trial division against a fixed prime
sieve, which is exact up to ``SIEVE_LIMIT ** 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Optional, Sequence, Tuple, Union

SIEVE_LIMIT = 10_000
MAX_N = SIEVE_LIMIT * SIEVE_LIMIT

Factorization = Tuple[Tuple[int, int], ...]


class RangeError(ValueError):
    """Input lies outside the supported integer range."""


class NotAUnitError(ValueError):
    """An element shares a factor with the modulus."""


def prime_sieve(limit: int) -> list[int]:
    """Primes ``<= limit`` by the sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = prime_sieve(SIEVE_LIMIT)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    >>> factorize(875)
    ((5, 3), (7, 1))
    """
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    if n > MAX_N:
        raise RangeError(f"{n} exceeds the supported range (<= {MAX_N})")
    out = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with ``lo <= p < hi``."""
    return [p for p in prime_sieve(hi - 1) if p >= lo]


def expand(factorization: Iterable[Tuple[int, int]]) -> int:
    return reduce(lambda acc, pe: acc * pe[0] ** pe[1], factorization, 1)


def _component_lambda(p: int, e: int) -> int:
    if p == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 2 ** (e - 2)
    return (p - 1) * p ** (e - 1)


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


@dataclass(frozen=True)
class Modulus:
    """A modulus ``n >= 2`` with its cached arithmetic invariants."""

    n: int
    factorization: Factorization = field(init=False, repr=False)
    phi: int = field(init=False)
    lam: int = field(init=False)
    xi: int = field(init=False)
    lam_primes: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
        fac = factorize(n)
        phi = 1
        lam = 1
        for p, e in fac:
            phi *= (p - 1) * p ** (e - 1)
            lam = _lcm(lam, _component_lambda(p, e))
        object.__setattr__(self, "factorization", fac)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "xi", phi // lam)
        object.__setattr__(self, "lam_primes", tuple(p for p, _ in factorize(lam)))

    @property
    def prime_powers(self) -> Tuple[int, ...]:
        return tuple(p**e for p, e in self.factorization)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    def is_unit(self, x: int) -> bool:
        return math.gcd(x, self.n) == 1

    def __int__(self) -> int:
        return self.n


ModLike = Union[int, Modulus]


@lru_cache(maxsize=4096)
def _cached_modulus(n: int) -> Modulus:
    return Modulus(n)


def as_modulus(m: ModLike) -> Modulus:
    if isinstance(m, Modulus):
        return m
    return _cached_modulus(int(m))


def euler_phi(m: ModLike) -> int:
    return as_modulus(m).phi


def carmichael_lambda(m: ModLike) -> int:
    return as_modulus(m).lam


def xi(m: ModLike) -> int:
    return as_modulus(m).xi


def order_mod(x: int, m: ModLike) -> int:
    """Multiplicative order of ``x`` modulo ``m``.

    Starts from lambda(n) and strips prime factors while the power stays 1,
    so the cost is a handful of modular exponentiations.
    """
    m = as_modulus(m)
    n = m.n
    x %= n
    if math.gcd(x, n) != 1:
        raise NotAUnitError(f"gcd({x}, {n}) = {math.gcd(x, n)} > 1")
    t = m.lam
    for ell in m.lam_primes:
        while t % ell == 0 and pow(x, t // ell, n) == 1:
            t //= ell
    return t


def inverse_mod(x: int, n: int) -> int:
    try:
        return pow(x, -1, n)
    except ValueError:
        raise NotAUnitError(f"{x} is not invertible modulo {n}") from None


def crt_combine(residues: Sequence[Tuple[int, int]]) -> int:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns the unique solution in ``[0, prod m_i)``.
    """
    x, mod = 0, 1
    for r, m in residues:
        if m < 1:
            raise ValueError(f"modulus must be positive, got {m}")
        if math.gcd(mod, m) != 1:
            raise ValueError(f"moduli are not pairwise coprime (gcd({mod}, {m}) > 1)")
        # x + mod*t = r (mod m)
        t = (r - x) * pow(mod, -1, m) % m if m > 1 else 0
        x += mod * t
        mod *= m
    return x % mod


def sqrt_mod_prime(a: int, p: int) -> Optional[Tuple[int, int]]:
    """Both square roots of ``a`` modulo an odd prime ``p``, or None.

    The pair is returned in ascending order; ``a = 0`` gives ``(0, 0)``.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"sqrt_mod_prime needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return (0, 0)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(a, p)
    return tuple(sorted((r, p - r)))


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def primitive_root(p: int) -> int:
    """Least primitive root of the prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = [q for q, _ in factorize(p - 1)]
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


def is_ap(values: Sequence[int], n: int) -> bool:
    """True when the residues form an arithmetic progression mod ``n``."""
    if len(values) < 3:
        return True
    d = (values[1] - values[0]) % n
    return all((values[i + 1] - values[i]) % n == d for i in range(len(values) - 1))
