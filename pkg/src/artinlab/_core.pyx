# cython: language_level=3
"""Compiled kernels. Signatures mirror ``artinlab._fallback`` exactly."""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64
ctypedef long long i64

cnp.import_array()


cdef inline u64 _powmod(u64 base, u64 exp, u64 m) noexcept nogil:
    # m < 2**32 so the products below fit in 64 bits
    cdef u64 result = 1 % m
    base %= m
    while exp:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result


cdef inline int _distinct_factors(i64 n, const i64[::1] spf, i64 *out) noexcept nogil:
    cdef int count = 0
    cdef i64 p
    while n > 1:
        p = spf[n]
        out[count] = p
        count += 1
        while n % p == 0:
            n //= p
    return count


cdef inline bint _is_generator(u64 g, u64 p, i64 *fac, int nfac) noexcept nogil:
    cdef int j
    if g % p == 0:
        return False
    for j in range(nfac):
        if _powmod(g, (p - 1) // <u64>fac[j], p) == 1:
            return False
    return True


def spf_sieve(i64 limit):
    """Linear (Euler) sieve; returns ``(spf, primes)`` as int64 arrays."""
    cdef cnp.ndarray[i64, ndim=1] spf_arr = np.zeros(limit + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] pr_arr = np.zeros(max(limit // 2 + 2, 8), dtype=np.int64)
    cdef i64[::1] spf = spf_arr
    cdef i64[::1] primes = pr_arr
    cdef i64 n, j, p, s, count = 0
    with nogil:
        if limit >= 1:
            spf[1] = 1
        for n in range(2, limit + 1):
            if spf[n] == 0:
                spf[n] = n
                primes[count] = n
                count += 1
            s = spf[n]
            for j in range(count):
                p = primes[j]
                if p > s or p * n > limit:
                    break
                spf[p * n] = p
    return spf_arr, pr_arr[:count].copy()


def mult_tables(const i64[::1] spf):
    """Return ``(mu, phi, big_omega, small_omega)`` arrays indexed by n."""
    cdef Py_ssize_t size = spf.shape[0]
    mu_arr = np.zeros(size, dtype=np.int8)
    phi_arr = np.zeros(size, dtype=np.int64)
    bo_arr = np.zeros(size, dtype=np.int8)
    so_arr = np.zeros(size, dtype=np.int8)
    cdef signed char[::1] mu = mu_arr
    cdef i64[::1] phi = phi_arr
    cdef signed char[::1] bo = bo_arr
    cdef signed char[::1] so = so_arr
    cdef i64 n, p, m
    with nogil:
        if size > 1:
            mu[1] = 1
            phi[1] = 1
        for n in range(2, size):
            p = spf[n]
            m = n // p
            bo[n] = bo[m] + 1
            if m % p == 0:
                so[n] = so[m]
                mu[n] = 0
                phi[n] = phi[m] * p
            else:
                so[n] = so[m] + 1
                mu[n] = -mu[m]
                phi[n] = phi[m] * (p - 1)
    return mu_arr, phi_arr, bo_arr, so_arr


def power_table(i64 g, i64 m, i64 n):
    """``[g**k % m for k in range(n)]``."""
    cdef cnp.ndarray[i64, ndim=1] out_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef u64 r = 1 % m
    cdef u64 gg = g % m
    cdef i64 k
    with nogil:
        for k in range(n):
            out[k] = <i64>r
            r = r * gg % <u64>m
    return out_arr


def primitive_root_flags(i64 a, const i64[::1] primes, const i64[::1] spf):
    """flags[i] = 1 iff ``a`` is a primitive root modulo ``primes[i]``."""
    cdef Py_ssize_t n = primes.shape[0]
    flags_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] flags = flags_arr
    cdef i64 fac[64]
    cdef Py_ssize_t i
    cdef i64 p, r
    cdef int nfac
    with nogil:
        for i in range(n):
            p = primes[i]
            r = a % p
            if r < 0:
                r += p
            if r == 0:
                continue
            nfac = _distinct_factors(p - 1, spf, fac)
            if _is_generator(<u64>r, <u64>p, fac, nfac):
                flags[i] = 1
    return flags_arr


def na_counts(const i64[::1] primes, const i64[::1] spf, i64 y):
    """counts[a + y] = #{p in primes : a is a primitive root mod p}, |a| <= y."""
    cdef Py_ssize_t nprimes = primes.shape[0]
    cdef i64 width = 2 * y + 1
    counts_arr = np.zeros(width, dtype=np.int64)
    cdef i64[::1] counts = counts_arr
    if nprimes == 0:
        return counts_arr
    cdef i64 pmax = primes[nprimes - 1]
    cdef unsigned char *coprime = <unsigned char *>malloc(pmax + 1)
    cdef unsigned char *is_pr = <unsigned char *>malloc(pmax + 1)
    if coprime == NULL or is_pr == NULL:
        free(coprime)
        free(is_pr)
        raise MemoryError()
    cdef i64 fac[64]
    cdef Py_ssize_t i
    cdef i64 p, order, k, r, g, j
    cdef int nfac, f
    cdef u64 acc
    try:
        with nogil:
            for i in range(nprimes):
                p = primes[i]
                order = p - 1
                nfac = _distinct_factors(order, spf, fac)
                memset(coprime, 1, order)
                for f in range(nfac):
                    k = 0
                    while k < order:
                        coprime[k] = 0
                        k += fac[f]
                g = 1
                while not _is_generator(<u64>g, <u64>p, fac, nfac):
                    g += 1
                memset(is_pr, 0, p)
                acc = 1 % <u64>p
                for k in range(order):
                    if coprime[k]:
                        is_pr[acc] = 1
                    acc = acc * <u64>g % <u64>p
                r = (-y) % p
                if r < 0:
                    r += p
                for j in range(width):
                    counts[j] += is_pr[r]
                    r += 1
                    if r == p:
                        r = 0
    finally:
        free(coprime)
        free(is_pr)
    return counts_arr
