"""Pure-Python (numpy) versions of the search kernels.

Used when the compiled ``_core`` extension is not built, or when
``APDECOMP_BACKEND=python`` is set.  Results are identical to the
compiled kernels; only speed differs.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "python"

# candidate block size for the vectorised (k, x) sweep
_BLOCK = 1 << 20


def _powmod_vec(base: np.ndarray, exp: np.ndarray, n: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % n
    e = exp.copy()
    while np.any(e > 0):
        odd = (e & 1).astype(bool)
        result[odd] = result[odd] * b[odd] % n
        b = b * b % n
        e >>= 1
    return result


def order_table(n: int, lam: int, lam_primes) -> np.ndarray:
    xs = np.arange(n, dtype=np.int64)
    units = np.gcd(xs, n) == 1
    if n >= 1:
        units[0] = n == 1
    out = np.zeros(n, dtype=np.int64)
    x = xs[units]
    t = np.full(x.shape, lam, dtype=np.int64)
    for ell in lam_primes:
        while True:
            cand = (t % ell) == 0
            if not cand.any():
                break
            idx = np.nonzero(cand)[0]
            drop = _powmod_vec(x[idx], t[idx] // ell, n) == 1
            if not drop.any():
                break
            t[idx[drop]] //= ell
    out[units] = t
    return out


def _is_direct(n: int, gens, orders) -> bool:
    seen = bytearray(n)
    seen[1] = 1
    elems = [1]
    for g, o in zip(gens, orders):
        if o == 1:
            continue
        block = elems
        for _ in range(o - 1):
            block = [v * g % n for v in block]
            for v in block:
                if seen[v]:
                    return False
                seen[v] = 1
            elems = elems + block
    return True


def direct_product(n: int, gens, orders) -> bool:
    if math.prod(orders) >= n:
        return False
    return _is_direct(n, [g % n for g in gens], list(orders))


def ap_search(n: int, phi: int, ords, length: int, allow_weak: bool,
              k_lo: int, k_hi: int, count_only: bool = False):
    if not 1 <= length <= 8:
        raise ValueError("length must be in 1..8")
    ords = np.asarray(ords, dtype=np.int64)
    xs = np.arange(1, n, dtype=np.int64)
    hits = []
    strong = weak = 0
    per_block = max(1, _BLOCK // max(n, 1))
    for k0 in range(k_lo, k_hi, per_block):
        ks = np.arange(k0, min(k_hi, k0 + per_block), dtype=np.int64)
        kk, xx = np.meshgrid(ks, xs, indexing="ij")
        kk = kk.ravel()
        xx = xx.ravel()
        prod = np.ones_like(xx)
        ones = np.zeros_like(xx)
        ok = np.ones(xx.shape, dtype=bool)
        cols = []
        for j in range(length):
            g = (xx + j * kk) % n
            o = ords[g]
            cols.append((g, o))
            ok &= o > 0
            prod = np.where(ok, prod * o, 1)
            ok &= phi % prod == 0
            ones += o == 1
        ok &= (prod == phi) & (ones <= (1 if allow_weak else 0))
        for i in np.nonzero(ok)[0]:
            gens = [int(c[0][i]) for c in cols]
            od = [int(c[1][i]) for c in cols]
            if _is_direct(n, gens, od):
                if 1 in od:
                    weak += 1
                else:
                    strong += 1
                if not count_only:
                    hits.append((int(xx[i]), int(kk[i])))
    if count_only:
        return strong, weak
    return hits
