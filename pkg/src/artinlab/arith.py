"""Exact integer arithmetic: factorization and the basic multiplicative functions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import NamedTuple

import numpy as np

MAX_INT = 2**63
TRIAL_LIMIT = 2**21
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if any(b <= a for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if self.value() != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


class MultInvariants(NamedTuple):
    mu: int
    phi: int
    big_omega: int
    small_omega: int


@dataclass(frozen=True)
class SquarefreeDecomposition:
    a: int
    b: int
    m: int
    negative: bool

    @property
    def signed_b(self) -> int:
        """Squarefree part carrying the sign of ``a`` (Hooley's convention)."""
        return -self.b if self.negative else self.b


@dataclass(frozen=True)
class PowerExponent:
    a: int
    h: int


@lru_cache(maxsize=1)
def _small_primes() -> np.ndarray:
    sieve = np.ones(TRIAL_LIMIT + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a base set that is deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial divisor of the odd composite ``n`` (Brent's variant)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factor(n: int) -> Factorization:
    """Canonical prime factorization of ``1 <= n < 2**63``."""
    n = int(n)
    if n < 1:
        raise ValueError(f"factor() needs a positive integer, got {n}")
    if n >= MAX_INT:
        raise ValueError(f"{n} is outside the 64-bit range")
    counts: dict[int, int] = {}
    rest = n
    if n < 1 << 16:
        p = 2
        while p * p <= rest:
            while rest % p == 0:
                counts[p] = counts.get(p, 0) + 1
                rest //= p
            p += 1 if p == 2 else 2
        if rest > 1:
            counts[rest] = counts.get(rest, 0) + 1
        return Factorization(n, tuple(sorted(counts.items())))

    primes = _small_primes()
    primes = primes[: np.searchsorted(primes, isqrt(n), side="right")]
    for p in primes[n % primes == 0].tolist():
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        counts[p] = e
    if rest > 1:
        if rest < TRIAL_LIMIT * TRIAL_LIMIT:
            counts[rest] = counts.get(rest, 0) + 1
        else:
            _split_large(rest, counts)
    return Factorization(n, tuple(sorted(counts.items())))


def mult_invariants(f: Factorization) -> MultInvariants:
    mu = 0 if any(e > 1 for _, e in f) else (-1) ** len(f.factors)
    phi = 1
    for p, e in f:
        phi *= (p - 1) * p ** (e - 1)
    return MultInvariants(mu, phi, sum(e for _, e in f), len(f.factors))


def squarefree_decompose(a: int) -> SquarefreeDecomposition:
    """Write ``|a| = b * m**2`` with ``b`` squarefree; the sign goes in a flag."""
    if a == 0:
        raise ValueError("squarefree part of 0 is undefined")
    b = m = 1
    for p, e in factor(abs(a)):
        if e % 2:
            b *= p
        m *= p ** (e // 2)
    return SquarefreeDecomposition(a, b, m, a < 0)


def power_exponent(a: int) -> PowerExponent:
    """Largest ``h`` such that ``a`` is a perfect h-th power (odd ``h`` when a < 0)."""
    if abs(a) <= 1:
        raise ValueError(f"power exponent needs |a| >= 2, got {a}")
    h = 0
    for _, e in factor(abs(a)):
        h = gcd(h, e)
    if a < 0:
        while h % 2 == 0:
            h //= 2
    return PowerExponent(a, h)


def mod_pow(base: int, exp: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, m)


def divisors(f: Factorization) -> list[int]:
    divs = [1]
    for p, e in f:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
