"""Prime and multiplicative-function tables over ``[0, limit]``.

Tables are built once and frozen (numpy arrays with ``writeable=False``), so
they can be shared between threads.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path

import numpy as np

from . import _kernels
from .arith import Factorization
from .errors import BudgetError

PRIME_LIMIT_MAX = 10**9
SPF_LIMIT_MAX = 10**8
CACHE_MAGIC = b"ARTNPRM1"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.primes)

    def pi(self, x: int) -> int:
        """Number of primes ``<= x`` (``x`` within the table)."""
        if x > self.limit:
            raise ValueError(f"x={x} exceeds table limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))

    def upto(self, x: int) -> np.ndarray:
        return self.primes[: self.pi(x)]

    def save(self, path) -> None:
        """Write the binary cache: magic, then little-endian u64 limit and primes."""
        path = Path(path)
        with path.open("wb") as fh:
            fh.write(CACHE_MAGIC)
            fh.write(struct.pack("<Q", self.limit))
            fh.write(np.asarray(self.primes, dtype="<u8").tobytes())

    @classmethod
    def load(cls, path) -> PrimeTable:
        data = Path(path).read_bytes()
        if data[:8] != CACHE_MAGIC:
            raise ValueError(f"{path}: not a prime cache (bad magic)")
        if (len(data) - 16) % 8:
            raise ValueError(f"{path}: truncated prime cache")
        (limit,) = struct.unpack("<Q", data[8:16])
        primes = np.frombuffer(data, dtype="<u8", offset=16).astype(np.int64)
        return cls(limit, _freeze(primes))


@dataclass(frozen=True)
class SpfTable:
    limit: int
    spf: np.ndarray = field(repr=False)

    def __getitem__(self, n):
        return self.spf[n]

    def factor(self, n: int) -> Factorization:
        if not 1 <= n <= self.limit:
            raise ValueError(f"{n} outside [1, {self.limit}]")
        orig = n
        counts: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts.append((p, e))
        return Factorization(orig, tuple(counts))

    def distinct_primes(self, n: int) -> list[int]:
        out = []
        while n > 1:
            p = int(self.spf[n])
            out.append(p)
            while n % p == 0:
                n //= p
        return out


@dataclass(frozen=True)
class MultTables:
    limit: int
    mu: np.ndarray = field(repr=False)
    phi: np.ndarray = field(repr=False)
    big_omega: np.ndarray = field(repr=False)
    small_omega: np.ndarray = field(repr=False)


def sieve_primes(limit: int) -> PrimeTable:
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > PRIME_LIMIT_MAX:
        raise BudgetError(f"prime sieve limit {limit} exceeds {PRIME_LIMIT_MAX}")
    if limit <= SPF_LIMIT_MAX:
        _, primes = _kernels.spf_sieve(limit)
    else:
        primes = _odd_sieve(limit)
    return PrimeTable(limit, _freeze(primes))


def _odd_sieve(limit: int) -> np.ndarray:
    # index i <-> 2i+1; half the memory of a plain byte sieve
    size = (limit - 1) // 2 + 1
    odd = np.ones(size, dtype=bool)
    odd[0] = False
    i = 1
    while (2 * i + 1) ** 2 <= limit:
        if odd[i]:
            p = 2 * i + 1
            odd[(p * p) // 2 :: p] = False
        i += 1
    return np.concatenate(([2], 2 * np.flatnonzero(odd) + 1)).astype(np.int64)


def sieve_spf(limit: int) -> SpfTable:
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > SPF_LIMIT_MAX:
        raise BudgetError(f"spf sieve limit {limit} exceeds {SPF_LIMIT_MAX}")
    spf, _ = _kernels.spf_sieve(limit)
    return SpfTable(limit, _freeze(spf))


def table_mult(limit: int, spf: SpfTable) -> MultTables:
    if spf.limit < limit:
        raise ValueError(f"spf table covers {spf.limit} < {limit}")
    arrays = _kernels.mult_tables(np.ascontiguousarray(spf.spf[: limit + 1]))
    return MultTables(limit, *(_freeze(a) for a in arrays))


class Tables:
    """Primes, smallest-prime-factor and multiplicative tables up to ``limit``."""

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError(f"limit must be >= 2, got {limit}")
        if limit > SPF_LIMIT_MAX:
            raise BudgetError(f"table limit {limit} exceeds {SPF_LIMIT_MAX}")
        self.limit = limit
        spf, primes = _kernels.spf_sieve(limit)
        self.spf = SpfTable(limit, _freeze(spf))
        self.primes = PrimeTable(limit, _freeze(primes))

    @cached_property
    def mult(self) -> MultTables:
        return table_mult(self.limit, self.spf)

    def require(self, x: int) -> None:
        if x > self.limit:
            raise ValueError(f"x={x} exceeds table coverage {self.limit}")

    def __repr__(self):
        return f"Tables(limit={self.limit})"


@lru_cache(maxsize=4)
def get_tables(limit: int) -> Tables:
    return Tables(limit)


def tables_for(x: int, tables: Tables | None = None) -> Tables:
    """Return ``tables`` if it covers ``x``, else a cached table set that does."""
    if tables is not None:
        tables.require(x)
        return tables
    return get_tables(max(int(x), 2))
