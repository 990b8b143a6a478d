"""Pure Python / numpy versions of the compiled kernels in ``_core.pyx``."""

from math import isqrt

import numpy as np


def _distinct_factors(n, spf):
    out = []
    while n > 1:
        p = int(spf[n])
        out.append(p)
        while n % p == 0:
            n //= p
    return out


def _is_generator(g, p, factors):
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // ell, p) != 1 for ell in factors)


def spf_sieve(limit):
    # Eratosthenes marking from p*p; yields the same table as the linear sieve
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    primes = np.flatnonzero(spf == np.arange(limit + 1))
    return spf, primes[primes >= 2].astype(np.int64)


def mult_tables(spf):
    size = len(spf)
    limit = size - 1
    mu = np.ones(size, dtype=np.int8)
    phi = np.arange(size, dtype=np.int64)
    big_omega = np.zeros(size, dtype=np.int8)
    small_omega = np.zeros(size, dtype=np.int8)
    idx = np.arange(size)
    primes = np.flatnonzero((spf == idx) & (idx >= 2))
    for p in primes.tolist():
        phi[p::p] //= p
        phi[p::p] *= p - 1
        mu[p::p] *= -1
        small_omega[p::p] += 1
        pk = p
        while pk <= limit:
            big_omega[pk::pk] += 1
            pk *= p
        if p * p <= limit:
            mu[p * p :: p * p] = 0
    mu[0] = 0
    phi[0] = 0
    return mu, phi, big_omega, small_omega


def power_table(g, m, n):
    if n <= 0:
        return np.zeros(0, dtype=np.int64)
    g %= m
    block = isqrt(n - 1) + 1
    small = np.empty(block, dtype=np.int64)
    r = 1 % m
    for k in range(block):
        small[k] = r
        r = r * g % m
    step = r  # g**block
    rows = -(-n // block)
    big = np.empty(rows, dtype=np.int64)
    r = 1 % m
    for j in range(rows):
        big[j] = r
        r = r * step % m
    if m < 3_000_000_000:
        table = (big[:, None] * small[None, :]) % m
    else:
        table = np.array(
            [[b * s % m for s in small.tolist()] for b in big.tolist()], dtype=np.int64
        )
    return table.ravel()[:n].copy()


def primitive_root_flags(a, primes, spf):
    flags = np.zeros(len(primes), dtype=np.uint8)
    for i, p in enumerate(primes.tolist()):
        r = a % p
        if r and _is_generator(r, p, _distinct_factors(p - 1, spf)):
            flags[i] = 1
    return flags


def na_counts(primes, spf, y):
    counts = np.zeros(2 * y + 1, dtype=np.int64)
    span = np.arange(-y, y + 1, dtype=np.int64)
    for p in primes.tolist():
        order = p - 1
        factors = _distinct_factors(order, spf)
        coprime = np.ones(order, dtype=bool)
        for ell in factors:
            coprime[::ell] = False
        g = 1
        while not _is_generator(g, p, factors):
            g += 1
        is_pr = np.zeros(p, dtype=np.int64)
        is_pr[power_table(g, p, order)[coprime]] = 1
        counts += is_pr[span % p]
    return counts
