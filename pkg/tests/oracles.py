"""Slow, independent reference implementations used as test oracles."""

import cmath
from math import gcd, isqrt


def trial_factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))


def primes_upto(x):
    return [p for p in range(2, x + 1) if is_prime(p)]


def phi_count(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def mobius(n):
    f = trial_factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** len(f)


def mult_order(a, p):
    a %= p
    if a == 0:
        return None
    k, r = 1, a
    while r != 1:
        r = r * a % p
        k += 1
    return k


def count_na_bruteforce(a, x):
    return sum(1 for p in primes_upto(x) if mult_order(a, p) == p - 1)


def legendre(a, p):
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _cyclic_local_characters(pk):
    # local characters of a cyclic (Z/p^k)^* given as value dicts, via brute-force generator search
    units = [a for a in range(1, pk) if gcd(a, pk) == 1]
    n = len(units)
    g = next(u for u in units if _order_mod(u, pk) == n)
    dlog = {pow(g, e, pk): e for e in range(n)}
    return [{a: cmath_exp(j * dlog[a] / n) for a in units} for j in range(n)]


def _order_mod(a, m):
    k, r = 1, a % m
    while r != 1:
        r = r * a % m
        k += 1
    return k


def cmath_exp(frac):
    return cmath.exp(2j * cmath.pi * frac)


def _two_power_characters(pk):
    units = list(range(1, pk, 2))
    if pk == 2:
        return [{1: 1}]
    if pk == 4:
        return [{1: 1, 3: 1}, {1: 1, 3: -1}]
    n = pk // 4
    dlog = {}
    for e in range(n):
        r = pow(5, e, pk)
        dlog[r] = (0, e)
        dlog[(-r) % pk] = (1, e)
    return [
        {a: (-1) ** (s * dlog[a][0]) * cmath_exp(j * dlog[a][1] / n) for a in units}
        for s in range(2)
        for j in range(n)
    ]


def all_characters(q):
    """Every character mod q as a list of q values (index = residue)."""
    chars = [[1 if q == 1 else (1 if gcd(a, q) == 1 else 0) for a in range(q)]]
    for p, k in trial_factor(q).items():
        pk = p**k
        local = _two_power_characters(pk) if p == 2 else _cyclic_local_characters(pk)
        chars = [
            [c[a] * loc.get(a % pk, 0) for a in range(q)] for c in chars for loc in local
        ]
    return chars


def is_primitive_values(values, q):
    # chi is induced from modulus d < q iff it is trivial on units = 1 mod d
    for d in range(1, q):
        if q % d:
            continue
        if all(abs(values[a] - 1) < 1e-9 for a in range(1, q) if gcd(a, q) == 1 and a % d == 1 % d):
            return False
    return True
