"""Dirichlet characters modulo q.

A character is stored as an exponent tuple ``c`` against fixed generators of
``(Z/q)^*``: for a unit with discrete-log tuple ``t`` its value is
``exp(2*pi*i * sum(c_j * t_j / n_j))``.  Phases are reduced exactly, as an
integer modulo the group exponent ``L``, before conversion to floating point.

Generators: the smallest primitive root for each odd prime power, ``-1`` for
4, and ``(-1, 5)`` for ``2**k`` with ``k >= 3``.  They are stored both as local
residues mod ``p**k`` and CRT-lifted to residues mod ``q`` (congruent to 1
modulo the other prime-power factors).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Iterator

import numpy as np

from . import _kernels
from .arith import divisors, factor
from .errors import BudgetError

UNIT_GROUP_MAX = 10**7


@dataclass(frozen=True)
class Component:
    prime: int
    exponent: int
    prime_power: int
    generators: tuple[int, ...]
    local_generators: tuple[int, ...]
    orders: tuple[int, ...]


@dataclass(frozen=True)
class Character:
    q: int
    c: tuple[int, ...]
    order: int
    conductor: int

    @property
    def primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def principal(self) -> bool:
        return self.order == 1


@dataclass(frozen=True)
class CharSumRecord:
    q: int
    y: int
    max_abs: float
    argmax_c: tuple[int, ...] | None
    num_primitive: int
    empty: bool = False


def _smallest_primitive_root(pk: int, p: int, k: int) -> int:
    phi = pk // p * (p - 1)
    ells = set(factor(p - 1).primes)
    if k > 1:
        ells.add(p)
    g = 2
    while True:
        if g % p and all(pow(g, phi // ell, pk) != 1 for ell in ells):
            return g
        g += 1


@lru_cache(maxsize=4096)
def _local_table(p: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...], np.ndarray]:
    """Local generators, orders and dlog table (flat local index, -1 off units)."""
    pk = p**k
    table = np.full(pk, -1, dtype=np.int32 if pk < 2**31 else np.int64)
    if p == 2:
        if k == 1:
            table[1] = 0
            return (), (), table
        if k == 2:
            table[1], table[3] = 0, 1
            return (3,), (2,), table
        n2 = pk // 4
        powers = _kernels.power_table(5, pk, n2)
        steps = np.arange(n2)
        table[powers] = steps
        table[pk - powers] = n2 + steps
        return (pk - 1, 5), (2, n2), table
    g = _smallest_primitive_root(pk, p, k)
    phi = pk // p * (p - 1)
    table[_kernels.power_table(g, pk, phi)] = np.arange(phi)
    return (g,), (phi,), table


class UnitGroup:
    """Generators and discrete logarithms for ``(Z/q)^*``."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError(f"modulus must be >= 1, got {q}")
        if q > UNIT_GROUP_MAX:
            raise BudgetError(f"modulus {q} exceeds the dlog table budget {UNIT_GROUP_MAX}")
        self.q = q
        comps = []
        self._locals = []  # (prime_power, local dlog table) per nontrivial part
        for p, k in factor(q):
            pk = p**k
            local_gens, orders, table = _local_table(p, k)
            if not orders:
                continue
            m = q // pk
            lift = [(g * m * pow(m, -1, pk) + pk * pow(pk, -1, m)) % q for g in local_gens]
            comps.append(Component(p, k, pk, tuple(lift), local_gens, orders))
            self._locals.append((pk, table))
        self.components: tuple[Component, ...] = tuple(comps)
        self.orders: tuple[int, ...] = tuple(n for comp in comps for n in comp.orders)
        self.generators: tuple[int, ...] = tuple(g for comp in comps for g in comp.generators)
        self.phi = int(np.prod(self.orders, dtype=np.int64)) if self.orders else 1
        self.exponent = lcm(*self.orders) if self.orders else 1
        # flat index of a local index block = local * stride (C order, last axis fastest)
        strides = []
        acc = 1
        for comp in reversed(comps):
            strides.append(acc)
            acc *= int(np.prod(comp.orders))
        self._strides = tuple(reversed(strides))
        axes, start = [], 0
        for comp in comps:
            axes.append(tuple(range(start, start + len(comp.orders))))
            start += len(comp.orders)
        self._axes = tuple(axes)

    def __repr__(self):
        return f"UnitGroup(q={self.q}, orders={self.orders})"

    @property
    def rank(self) -> int:
        return len(self.orders)

    def flat_index(self, residues) -> np.ndarray:
        """Flat (C-order) dlog index of each residue; -1 for non-units."""
        a = np.asarray(residues, dtype=np.int64) % self.q
        idx = np.zeros(a.shape, dtype=np.int64)
        for (pk, table), stride in zip(self._locals, self._strides):
            idx += table[a % pk].astype(np.int64) * stride
        unit = np.gcd(a, self.q) == 1
        idx[~unit] = -1
        return idx

    @cached_property
    def dlog_index(self) -> np.ndarray:
        idx = self.flat_index(np.arange(self.q))
        idx.flags.writeable = False
        return idx

    @cached_property
    def tuples(self) -> np.ndarray:
        """``tuples[i]`` is the exponent tuple of flat index ``i`` (shape phi x rank)."""
        if not self.orders:
            return np.zeros((1, 0), dtype=np.int64)
        out = np.stack(np.unravel_index(np.arange(self.phi), self.orders), axis=1)
        out = out.astype(np.int64)
        out.flags.writeable = False
        return out

    def dlog(self, a: int) -> tuple[int, ...]:
        i = int(self.flat_index([a])[0])
        if i < 0:
            raise ValueError(f"{a} is not a unit modulo {self.q}")
        return tuple(int(t) for t in np.unravel_index(i, self.orders)) if self.orders else ()

    def recombine(self, t) -> int:
        r = 1 % self.q if self.q > 1 else 0
        for g, e in zip(self.generators, t):
            r = r * pow(g, int(e), self.q) % self.q
        return r

    def character(self, c) -> Character:
        c = tuple(int(v) % n for v, n in zip(c, self.orders))
        if len(c) != self.rank:
            raise ValueError(f"need {self.rank} exponents for q={self.q}")
        chi = Character(self.q, c, _order(c, self.orders), 0)
        return Character(self.q, c, chi.order, conductor(self, chi))

    def character_at(self, flat: int) -> Character:
        return self.character(self.tuples[flat]) if self.orders else self.character(())

    def weights(self, c) -> np.ndarray:
        """Integer phase weights: angle numerator is ``t @ weights`` mod ``exponent``."""
        L = self.exponent
        return np.array([cj * (L // n) % L for cj, n in zip(c, self.orders)], dtype=np.int64)


def _order(c, orders) -> int:
    return lcm(1, *(n // gcd(n, cj) for cj, n in zip(c, orders)))


@lru_cache(maxsize=128)
def build_unit_group(q: int) -> UnitGroup:
    return UnitGroup(q)


def char_angles(group: UnitGroup, chi: Character, residues) -> np.ndarray:
    """Exact phase numerators modulo ``group.exponent``; -1 where the residue is not a unit."""
    idx = group.flat_index(residues)
    num = np.full(idx.shape, -1, dtype=np.int64)
    unit = idx >= 0
    if group.rank:
        num[unit] = (group.tuples[idx[unit]] @ group.weights(chi.c)) % group.exponent
    else:
        num[unit] = 0
    return num


def char_values(group: UnitGroup, chi: Character, residues) -> np.ndarray:
    num = char_angles(group, chi, residues)
    out = np.exp(2j * np.pi * (np.maximum(num, 0) / group.exponent))
    out[num < 0] = 0
    return out


def char_value(group: UnitGroup, chi: Character, a: int) -> complex:
    return complex(char_values(group, chi, [a])[0])


# -- conductors ------------------------------------------------------------


def _trivial_on(group: UnitGroup, chi: Character, d: int) -> bool:
    candidates = np.arange(1 % group.q, group.q, d) if group.q > 1 else np.zeros(1, np.int64)
    num = char_angles(group, chi, candidates)
    return bool(np.all(num[num >= 0] == 0))


def conductor_bruteforce(group: UnitGroup, chi: Character) -> int:
    """Smallest d | q with chi trivial on units congruent to 1 mod d."""
    for d in divisors(factor(group.q)):
        if _trivial_on(group, chi, d):
            return d
    return group.q


@lru_cache(maxsize=65536)
def _two_part_conductor(k: int, cs: tuple[int, ...]) -> int:
    # direct definition on the local group (Z/2^k)^*
    _, orders, table = _local_table(2, k)
    n_last = orders[-1]
    pk = 2**k
    if len(orders) == 1:
        weights = (cs[0],)
    else:
        weights = (cs[0] * (n_last // 2) % n_last, cs[1])
    for j in range(k + 1):
        elems = np.arange(1, pk, 2**j) if j else np.arange(1, pk, 2)
        flat = table[elems].astype(np.int64)
        if len(orders) == 1:
            angle = (flat * weights[0]) % orders[0]
        else:
            t1, t2 = np.divmod(flat, n_last)
            angle = (t1 * weights[0] + t2 * weights[1]) % n_last
        if np.all(angle == 0):
            return 2**j
    return pk


def conductor(group: UnitGroup, chi: Character) -> int:
    """Conductor from per-component formulas; the 2-part uses the direct definition."""
    f = 1
    for comp, axes in zip(group.components, group._axes):
        cs = tuple(chi.c[i] for i in axes)
        if comp.prime == 2:
            f *= _two_part_conductor(comp.exponent, cs)
            continue
        c = cs[0]
        if c == 0:
            continue
        p, k = comp.prime, comp.exponent
        if c % p ** (k - 1) == 0:
            f *= p
        else:
            v = 0
            while c % p == 0:
                c //= p
                v += 1
            f *= p ** (k - v)
    return f


def primitive_mask(group: UnitGroup) -> np.ndarray:
    """Boolean mask over flat character indices marking primitive characters."""
    if not group.orders:
        return np.array([group.q == 1])
    mask = np.ones(group.orders, dtype=bool)
    for comp, axes in zip(group.components, group._axes):
        shape = [1] * group.rank
        if comp.prime == 2:
            local = _two_part_primitive(comp.exponent)
            for ax, n in zip(axes, comp.orders):
                shape[ax] = n
        else:
            local = np.arange(comp.orders[0]) % comp.prime != 0
            shape[axes[0]] = comp.orders[0]
        mask &= local.reshape(shape)
    if group.q % 4 == 2:
        mask[...] = False
    return mask.ravel()


@lru_cache(maxsize=64)
def _two_part_primitive(k: int) -> np.ndarray:
    # primitive iff not trivial on the kernel of reduction mod 2^(k-1), i.e. on 1 + 2^(k-1)
    _, orders, table = _local_table(2, k)
    pk = 2**k
    flat = int(table[1 + pk // 2])
    if len(orders) == 1:
        return np.arange(orders[0]) * flat % orders[0] != 0
    n2 = orders[1]
    t1, t2 = divmod(flat, n2)
    c1 = np.arange(2)[:, None]
    c2 = np.arange(n2)[None, :]
    return (c1 * t1 * (n2 // 2) + c2 * t2) % n2 != 0


# -- enumeration -----------------------------------------------------------


def enumerate_characters(group: UnitGroup) -> Iterator[Character]:
    for i in range(group.phi):
        yield group.character_at(i)


def enumerate_primitive(group: UnitGroup) -> Iterator[Character]:
    for i in np.flatnonzero(primitive_mask(group)).tolist():
        yield group.character_at(i)


def num_primitive(group: UnitGroup) -> int:
    return int(primitive_mask(group).sum())


# -- character sums --------------------------------------------------------


def char_sum(group: UnitGroup, chi: Character, y: int) -> complex:
    """``sum_{a=1}^{y} chi(a)``, using full periods for the bulk."""
    if y < 1:
        raise ValueError("y must be >= 1")
    q = group.q
    full, rest = divmod(y, q)
    total = 0j
    if full:
        total += full * complex(char_values(group, chi, np.arange(1, q + 1)).sum())
    if rest:
        total += complex(char_values(group, chi, np.arange(1, rest + 1)).sum())
    return total


def char_sum_symmetric(group: UnitGroup, chi: Character, y: int) -> complex:
    if y < 1:
        raise ValueError("y must be >= 1")
    return complex(char_values(group, chi, np.arange(-y, y + 1)).sum())


def character_sums(group: UnitGroup, elements) -> np.ndarray:
    """All ``phi(q)`` sums ``sum_{a in elements} chi(a)`` at once, as a flat array.

    The elements are binned by discrete-log tuple and the sums are read off an
    inverse multidimensional FFT over the character group.
    """
    idx = group.flat_index(np.asarray(elements, dtype=np.int64))
    counts = np.bincount(idx[idx >= 0], minlength=group.phi).astype(np.float64)
    if not group.orders:
        return counts.astype(np.complex128)
    spectrum = np.fft.ifftn(counts.reshape(group.orders)) * group.phi
    return spectrum.ravel()


def primitive_sums(group: UnitGroup, elements) -> tuple[np.ndarray, np.ndarray]:
    """Flat indices of the primitive characters and their sums over ``elements``."""
    mask = primitive_mask(group)
    flat = np.flatnonzero(mask)
    if not len(flat):
        return flat, np.zeros(0, dtype=np.complex128)
    return flat, character_sums(group, elements)[mask]


def _record(group, y, flat, sums) -> CharSumRecord:
    if not len(flat):
        return CharSumRecord(group.q, y, 0.0, None, 0, empty=True)
    mags = np.abs(sums)
    best = int(np.argmax(mags))
    c = tuple(int(v) for v in group.tuples[flat[best]]) if group.rank else ()
    return CharSumRecord(group.q, y, float(mags[best]), c, len(flat))


def max_primitive_char_sum(group: UnitGroup, y: int, method: str = "fft") -> CharSumRecord:
    """Largest ``|sum_{a<=y} chi(a)|`` over primitive characters mod q.

    Moduli without primitive characters (``q = 2 mod 4``) give a record with
    ``empty=True``.
    """
    if y < 1:
        raise ValueError("y must be >= 1")
    if method == "fft":
        flat, sums = primitive_sums(group, np.arange(1, y + 1))
        return _record(group, y, flat, sums)
    if method == "naive":
        return _max_naive(group, np.arange(1, y + 1), y)
    raise ValueError(f"unknown method {method!r}")


def _max_naive(group: UnitGroup, elements, y) -> CharSumRecord:
    idx = group.flat_index(elements)
    idx = idx[idx >= 0]
    t = group.tuples[idx]
    flat = []
    sums = []
    for chi_flat in np.flatnonzero(primitive_mask(group)).tolist():
        c = group.tuples[chi_flat] if group.rank else ()
        num = (t @ group.weights(c)) % group.exponent if group.rank else np.zeros(len(idx))
        sums.append(np.exp(2j * np.pi * num / group.exponent).sum())
        flat.append(chi_flat)
    return _record(group, y, np.array(flat, dtype=np.int64), np.array(sums))


def max_primitive_sum_over(group: UnitGroup, elements, method: str = "fft") -> CharSumRecord:
    """Max over primitive characters of ``|sum_{a in elements} chi(a)|``."""
    elements = np.asarray(elements, dtype=np.int64)
    if method == "naive":
        return _max_naive(group, elements, len(elements))
    flat, sums = primitive_sums(group, elements)
    return _record(group, len(elements), flat, sums)
