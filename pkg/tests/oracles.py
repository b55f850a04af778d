"""Deliberately naive reference implementations.

Nothing here imports the package: every function works from the
definitions by linear scans and closure, so agreement with the optimised
code is evidence rather than tautology.
"""

from math import gcd


def factor(n):
    out, d = [], 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def units(n):
    return [x for x in range(1, n) if gcd(x, n) == 1] if n > 1 else []


def phi(n):
    return len(units(n)) if n > 2 else 1


def order(x, n):
    if gcd(x, n) != 1:
        return 0
    t, y = 1, x % n
    while y != 1 % n:
        y = y * x % n
        t += 1
    return t


def lam(n):
    return max((order(x, n) for x in units(n)), default=1)


def closure(gens, n):
    """The subgroup of U_n generated by ``gens``, as a set."""
    seen = {1 % n}
    frontier = [1 % n]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g % n
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def is_direct(gens, n):
    """Direct product of the cyclic groups <g>: orders multiply to the generated order = phi."""
    prod = 1
    for g in gens:
        prod *= order(g, n)
    return prod == phi(n) and len(closure(gens, n)) == prod


def ap_decompositions(n, length=3, weak=False):
    """Canonical (x, k) with k < n - k for every AP decomposition of U_n."""
    out = []
    for k in range(1, (n + 1) // 2):
        if 2 * k == n:
            continue
        for x in range(1, n):
            gens = [(x + i * k) % n for i in range(length)]
            if any(gcd(g, n) != 1 for g in gens):
                continue
            ones = sum(g == 1 for g in gens)
            if ones > (1 if weak else 0):
                continue
            if is_direct(gens, n):
                out.append((x, k))
    return out


def is_ap(vals, n):
    k = (vals[1] - vals[0]) % n
    return all((vals[i + 1] - vals[i]) % n == k for i in range(len(vals) - 1))


# -- polynomial arithmetic over GF(p), coefficient lists with constant first --------

def poly_mulmod(a, b, f, p):
    k = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * f[j]) % p
    prod = (prod + [0] * k)[:k]
    return prod


def field_powers(f, p):
    """[x^0, x^1, ...] mod f until the sequence returns to 1; tuples of length k."""
    k = len(f) - 1
    one = [1] + [0] * (k - 1)
    x = [0, 1] + [0] * (k - 2) if k > 1 else [(-f[0]) % p]
    out = [tuple(one)]
    cur = x
    while tuple(cur) != tuple(one):
        out.append(tuple(cur))
        cur = poly_mulmod(cur, x, f, p)
    return out
