"""Primitive roots, N_a(x), and Hooley's conjectural densities."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .arith import Factorization, factor, mult_invariants, power_exponent, squarefree_decompose
from .characters import UnitGroup, build_unit_group, char_values, enumerate_characters
from .sieve import Tables, sieve_primes, tables_for

DEFAULT_PRIME_CUTOFF = 10**6
MIN_PRIME_CUTOFF = 100


@dataclass(frozen=True)
class EulerProductValue:
    value: float
    prime_cutoff: int
    tail_bound: float

    @property
    def interval(self) -> tuple[float, float]:
        return (self.value * math.exp(-self.tail_bound), self.value * math.exp(self.tail_bound))


@dataclass(frozen=True)
class ArtinProfile:
    a: int
    h: int
    b: int
    negative: bool
    density: float
    degenerate: bool
    signed: bool = False


def is_primitive_root(a: int, p: int, fac_pm1: Factorization | None = None) -> bool:
    """True iff ``a`` generates ``(Z/p)^*``; ``p`` must be prime."""
    if fac_pm1 is None:
        fac_pm1 = factor(p - 1)
    r = a % p
    if r == 0:
        return False
    return all(pow(r, (p - 1) // ell, p) != 1 for ell in fac_pm1.primes)


def count_na(a: int, x: int, tables: Tables | None = None) -> int:
    """N_a(x): number of primes ``p <= x`` for which ``a`` is a primitive root."""
    if x < 2:
        raise ValueError("x must be >= 2")
    tables = tables_for(x, tables)
    primes = tables.primes.upto(x)
    return int(_kernels.primitive_root_flags(int(a), primes, tables.spf.spf).sum())


def na_range(y: int, x: int, tables: Tables | None = None, threads: int = 1) -> np.ndarray:
    """``out[a + y] = N_a(x)`` for every ``-y <= a <= y``."""
    if y < 0:
        raise ValueError("y must be >= 0")
    tables = tables_for(x, tables)
    primes = tables.primes.upto(x)
    spf = tables.spf.spf
    if threads <= 1 or len(primes) < 2 * threads:
        return _kernels.na_counts(primes, spf, y)
    # interleaved chunks balance the O(p) per-prime cost; integer sums are order-free
    chunks = [np.ascontiguousarray(primes[i::threads]) for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda ch: _kernels.na_counts(ch, spf, y), chunks))
    return np.sum(parts, axis=0)


@lru_cache(maxsize=512)
def _mu_phi(t: int) -> tuple[int, int]:
    inv = mult_invariants(factor(t))
    return inv.mu, inv.phi


def indicator_via_characters(a, p: int, group: UnitGroup | None = None):
    """Character-sum detector of primitive roots modulo the prime ``p``.

    Evaluates ``phi(p-1)/(p-1) * sum_{t | p-1} mu(t)/phi(t) * sum_{ord chi = t} chi(a)``,
    which is 1 on primitive roots and 0 elsewhere.  ``a`` may be an array.
    """
    group = group or build_unit_group(p)
    residues = np.atleast_1d(np.asarray(a, dtype=np.int64))
    total = np.zeros(residues.shape, dtype=np.complex128)
    for chi in enumerate_characters(group):
        mu, phi_t = _mu_phi(chi.order)
        if mu:
            total += (mu / phi_t) * char_values(group, chi, residues)
    _, phi_pm1 = _mu_phi(p - 1) if p > 2 else (1, 1)
    out = (phi_pm1 / (p - 1)) * total.real if p > 2 else total.real
    return float(out[0]) if np.ndim(a) == 0 else out


# -- Euler products ----------------------------------------------------------


@lru_cache(maxsize=8)
def _primes_upto(cutoff: int) -> np.ndarray:
    return sieve_primes(cutoff).primes


def euler_product(h: int, prime_cutoff: int) -> EulerProductValue:
    """A(h) truncated to primes ``<= prime_cutoff`` for the generic factors.

    Factors for primes dividing ``h`` are included exactly; the tail over the
    remaining primes satisfies ``sum 1/(l^2-l-1) <= 1/prime_cutoff`` in log space.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if prime_cutoff < 2:
        raise ValueError("prime_cutoff must be >= 2")
    tail = 1.0 / prime_cutoff
    h_primes = factor(h).primes
    if 2 in h_primes:
        return EulerProductValue(0.0, prime_cutoff, tail)
    ells = _primes_upto(prime_cutoff).astype(np.float64)
    keep = np.ones(len(ells), dtype=bool)
    for ell in h_primes:
        keep &= ells != ell
    generic = ells[keep]
    log_value = float(np.sum(np.log1p(-1.0 / (generic * (generic - 1.0)))))
    log_value += sum(math.log1p(-1.0 / (ell - 1)) for ell in h_primes)
    return EulerProductValue(math.exp(log_value), prime_cutoff, tail)


def artin_constant(prime_cutoff: int = DEFAULT_PRIME_CUTOFF) -> EulerProductValue:
    if prime_cutoff < MIN_PRIME_CUTOFF:
        raise ValueError(f"prime_cutoff must be >= {MIN_PRIME_CUTOFF}")
    return euler_product(1, prime_cutoff)


def a_of_h(h: int, prime_cutoff: int = DEFAULT_PRIME_CUTOFF) -> EulerProductValue:
    return euler_product(h, prime_cutoff)


def hooley_density(
    a: int, prime_cutoff: int = DEFAULT_PRIME_CUTOFF, signed: bool = False
) -> ArtinProfile:
    """Conjectural density of primes for which ``a`` is a primitive root.

    ``signed=False`` takes ``b`` as the squarefree part of ``|a|``;
    ``signed=True`` tests ``b = 1 (mod 4)`` on the squarefree part carrying the
    sign of ``a``.
    """
    if a in (0, 1, -1):
        return ArtinProfile(a, 1, abs(a), a < 0, 0.0, True, signed)
    h = power_exponent(a).h
    sq = squarefree_decompose(a)
    if h % 2 == 0:
        return ArtinProfile(a, h, sq.b, sq.negative, 0.0, True, signed)
    base = a_of_h(h, prime_cutoff).value
    b_test = sq.signed_b if signed else sq.b
    if b_test % 4 != 1:
        density = base
    else:
        fb = factor(sq.b)
        correction = 1.0
        for ell in fb.primes:
            correction /= (ell - 2) if h % ell == 0 else (ell * ell - ell - 1)
        density = base * (1.0 - mult_invariants(fb).mu * correction)
    return ArtinProfile(a, h, sq.b, sq.negative, density, False, signed)


def predicted_count(
    a: int, x: int, tables: Tables | None = None, prime_cutoff: int = DEFAULT_PRIME_CUTOFF
) -> float:
    tables = tables_for(x, tables)
    return hooley_density(a, prime_cutoff).density * tables.primes.pi(x)
