# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled search kernels.  Same API as ``_pycore``; see that module."""

import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector
from libc.stdint cimport int64_t

cnp.import_array()

NAME = "compiled"


cdef inline int64_t _powmod(int64_t b, int64_t e, int64_t n) noexcept nogil:
    cdef int64_t r = 1 % n
    b %= n
    while e > 0:
        if e & 1:
            r = r * b % n
        b = b * b % n
        e >>= 1
    return r


cdef inline int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    while b:
        a, b = b, a % b
    return a


def order_table(int64_t n, int64_t lam, lam_primes):
    """Orders of all residues mod n (0 marks a non-unit)."""
    cdef cnp.ndarray[int64_t, ndim=1] out = np.zeros(n, dtype=np.int64)
    cdef int64_t[:] ords = out
    cdef vector[int64_t] primes
    for ell in lam_primes:
        primes.push_back(ell)
    cdef int64_t x, t, ell_c
    cdef size_t i
    with nogil:
        for x in range(1, n):
            if _gcd(x, n) != 1:
                continue
            t = lam
            for i in range(primes.size()):
                ell_c = primes[i]
                while t % ell_c == 0 and _powmod(x, t // ell_c, n) == 1:
                    t //= ell_c
            ords[x] = t
    return out


cdef bint _is_direct(int64_t n, int64_t* gens, int64_t* orders, int r,
                     int64_t* buf, int64_t* seen, int64_t stamp) noexcept nogil:
    # buf must hold prod(orders) entries; seen has n slots keyed by stamp
    cdef int64_t length = 1, e, i, v, base
    cdef int j
    buf[0] = 1
    seen[1] = stamp
    for j in range(r):
        if orders[j] == 1:
            continue
        for e in range(1, orders[j]):
            base = (e - 1) * length
            for i in range(length):
                v = buf[base + i] * gens[j] % n
                if seen[v] == stamp:
                    return False
                seen[v] = stamp
                buf[e * length + i] = v
        length *= orders[j]
    return True


def direct_product(int64_t n, gens, orders):
    """True iff the listed cyclic factors multiply injectively (orders given)."""
    cdef int r = len(gens)
    cdef vector[int64_t] g, o
    total = 1
    for a, b in zip(gens, orders):
        g.push_back(a % n)
        o.push_back(b)
        total *= b
    if total >= n:
        return False
    cdef int64_t tot = total
    cdef vector[int64_t] buf = vector[int64_t](tot + 1)
    cdef vector[int64_t] seen = vector[int64_t](n + 1)
    return _is_direct(n, g.data(), o.data(), r, buf.data(), seen.data(), 1)


def ap_search(int64_t n, int64_t phi, const int64_t[:] ords, int length, bint allow_weak,
              int64_t k_lo, int64_t k_hi, bint count_only=False):
    """Enumerate (x, k) with k in [k_lo, k_hi) whose AP of given length decomposes U_n.

    Returns a list of (x, k) sorted by (k, x), or (strong, weak) counts when
    ``count_only`` is set.
    """
    cdef int64_t k, x, prod, stamp = 0, strong = 0, weak = 0
    cdef int j, ones
    cdef int64_t gens[8]
    cdef int64_t ordv[8]
    cdef vector[int64_t] buf = vector[int64_t](phi + 1)
    cdef vector[int64_t] seen = vector[int64_t](n + 1)
    cdef vector[int64_t] hits
    cdef bint ok
    if length < 1 or length > 8:
        raise ValueError("length must be in 1..8")
    with nogil:
        for k in range(k_lo, k_hi):
            for x in range(1, n):
                prod = 1
                ones = 0
                ok = True
                for j in range(length):
                    gens[j] = (x + j * k) % n
                    ordv[j] = ords[gens[j]]
                    if ordv[j] == 0:
                        ok = False
                        break
                    prod *= ordv[j]
                    if phi % prod != 0:
                        ok = False
                        break
                    if ordv[j] == 1:
                        ones += 1
                if not ok or prod != phi or ones > 1:
                    continue
                if ones == 1 and not allow_weak:
                    continue
                stamp += 1
                if _is_direct(n, gens, ordv, length, buf.data(), seen.data(), stamp):
                    if ones:
                        weak += 1
                    else:
                        strong += 1
                    if not count_only:
                        hits.push_back(x)
                        hits.push_back(k)
    if count_only:
        return strong, weak
    return [(hits[2 * i], hits[2 * i + 1]) for i in range(hits.size() // 2)]
