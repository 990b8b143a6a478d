"""Finite-scale experiments: Omega level sets, T_k counts, the large sieve,
character-sum censuses and the moments of N_a(x)."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .characters import UnitGroup, max_primitive_sum_over, primitive_sums
from .densities import DEFAULT_PRIME_CUTOFF, artin_constant, na_range
from .errors import BudgetError
from .sieve import Tables, tables_for

NICOLAS_C = 0.3786
RANGE_Y_CONSTANT = 20.0

DEFAULT_BUDGETS = {
    "census": 10**5,  # largest modulus x
    "tk": 10**8,  # (#A_w(y))^k tuples
    "large_sieve": 10**4,  # largest modulus x
    "moments": 2 * 10**9,  # (2y+1) * pi(x) primitive-root decisions
}


def _budget(budgets, key):
    return (budgets or {}).get(key, DEFAULT_BUDGETS[key])


@dataclass(frozen=True)
class LevelSetStat:
    y: int
    w: int
    count: int
    nicolas_main: float
    lower_ref: float


@dataclass(frozen=True)
class TkResult:
    k: int
    w: int
    y: int
    value: int
    bound: float
    multinomial_bound: int


@dataclass(frozen=True)
class LambdaChoice:
    lam: float
    range_c_ok: bool
    range_y_ok: bool


@dataclass(frozen=True)
class CensusRow:
    q: int
    num_primitive: int
    max_abs: float
    normalized: float
    exceeds: tuple[bool, ...]

    @property
    def empty(self) -> bool:
        return self.num_primitive == 0


@dataclass(frozen=True)
class CensusResult:
    x: int
    y: int
    lam: float
    thresholds: tuple[float, ...]
    rows: list[CensusRow] = field(repr=False)
    counts: tuple[int, ...] = ()

    def summary(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "lambda": self.lam,
            "moduli": len(self.rows),
            "moduli_with_primitive": sum(not r.empty for r in self.rows),
            "thresholds": list(self.thresholds),
            "exceptional_counts": list(self.counts),
        }


@dataclass(frozen=True)
class MomentReport:
    x: int
    y: int
    first_moment: int
    first_prediction: float
    second_central: float
    normalized_variance: float
    lambda_used: float

    @property
    def first_ratio(self) -> float:
        return self.first_moment / self.first_prediction if self.first_prediction else math.nan


@dataclass(frozen=True)
class TitchmarshResult:
    x: int
    sum: int
    ratio: float


# -- Omega level sets -------------------------------------------------------


def omega_upto(y: int, tables: Tables | None = None) -> np.ndarray:
    """``Omega(n)`` for ``n = 0..y`` (entry 0 is unused)."""
    tables = tables_for(y, tables)
    return tables.mult.big_omega[: y + 1]


def level_set(w: int, y: int, tables: Tables | None = None) -> np.ndarray:
    """Sorted elements of ``A_w(y) = {a <= y : Omega(a) = w}``."""
    if y < 1:
        return np.zeros(0, dtype=np.int64)
    big_omega = omega_upto(max(y, 2), tables)[1 : y + 1]
    return (np.flatnonzero(big_omega == w) + 1).astype(np.int64)


def level_set_counts(y: int, tables: Tables | None = None) -> list[LevelSetStat]:
    if y < 2:
        raise ValueError("y must be >= 2")
    counts = np.bincount(omega_upto(y, tables)[1 : y + 1])
    log_y = math.log(y)
    out = []
    for w in range(int(math.log2(y)) + 1):
        scaled = y / 2**w
        out.append(
            LevelSetStat(
                y,
                w,
                int(counts[w]) if w < len(counts) else 0,
                NICOLAS_C * scaled * math.log(scaled),
                scaled / log_y,
            )
        )
    return out


def f_lambda(y: int, lam: float, tables: Tables | None = None) -> int:
    """``#{a <= y : Omega(a) > lam * log log y}``."""
    if y < 16:
        raise ValueError("y must be >= 16")
    threshold = lam * math.log(math.log(y))
    return int(np.count_nonzero(omega_upto(y, tables)[1 : y + 1] > threshold))


# -- T_k and the large sieve ------------------------------------------------


def t_k_bruteforce(
    k: int, w: int, y: int, tables: Tables | None = None, budget: int | None = None
) -> TkResult:
    """Ordered solutions of ``a_1...a_k = b_1...b_k`` with all entries in ``A_w(y)``."""
    if k < 1 or w < 1:
        raise ValueError("k and w must be >= 1")
    elems = level_set(w, y, tables).tolist()
    s = len(elems)
    limit = budget if budget is not None else DEFAULT_BUDGETS["tk"]
    if s**k > limit:
        raise BudgetError(f"(#A_w(y))^k = {s}^{k} exceeds the enumeration budget {limit}")
    reps = Counter({1: 1})
    for _ in range(k):
        nxt: Counter = Counter()
        for m, c in reps.items():
            for a in elems:
                nxt[m * a] += c
        reps = nxt
    value = sum(c * c for c in reps.values()) if s else 0
    bound = math.e * w * float(k) ** (k * w + 1) * float(s) ** k
    multinomial = math.factorial(k * w) // math.factorial(w) ** k * s**k
    return TkResult(k, w, y, value, bound, multinomial)


def k_select(x: int, y: int) -> int:
    """The integer ``k >= 1`` with ``y**k < x**2 <= y**(k+1)``."""
    if y < 2 or x * x <= y:
        raise ValueError("need y >= 2 and x^2 > y")
    target = x * x
    k = 1
    while y ** (k + 1) < target:
        k += 1
    return k


def large_sieve_terms(
    k: int, w: int, x: int, y: int, tables: Tables | None = None, budgets=None
) -> tuple[float, int, float]:
    """Return ``(S_k, T_k, ratio)`` with ``ratio = S_k / ((x^2 + y^k) T_k)``.

    ``S_k`` sums ``|sum_{a in A_w(y)} chi(a)|^(2k)`` over every primitive
    character of every modulus ``q <= x`` (q = 1 included).
    """
    if x > _budget(budgets, "large_sieve"):
        raise BudgetError(f"x={x} exceeds the large-sieve budget")
    elems = level_set(w, y, tables)
    if not len(elems):
        return 0.0, 0, 0.0
    tk = t_k_bruteforce(k, w, y, tables, _budget(budgets, "tk")).value
    total = 0.0
    for q in range(1, x + 1):
        _, sums = primitive_sums(UnitGroup(q), elems)
        total += float(np.sum(np.abs(sums) ** (2 * k)))
    return total, tk, total / ((x * x + y**k) * tk)


def large_sieve_check(k: int, w: int, x: int, y: int, tables: Tables | None = None) -> float:
    return large_sieve_terms(k, w, x, y, tables)[2]


# -- parameter choices ------------------------------------------------------


def lambda_of(D: float, x: float, y: float, range_constant: float = RANGE_Y_CONSTANT) -> LambdaChoice:
    """lambda = (3D+2)/log 2 * loglog(x^2)/loglog y + 1/log 2, with range checks.

    ``range_c_ok``: 3 <= lambda <= log y / (log log y)^2.
    ``range_y_ok``: exp(c lambda log(lambda loglog x) loglog x) <= y <= x, c = range_constant.
    """
    if x < 16 or y < 16:
        raise ValueError("x and y must be >= 16")
    ln2 = math.log(2)
    llx = math.log(math.log(x))
    lly = math.log(math.log(y))
    lam = (3 * D + 2) / ln2 * math.log(2 * math.log(x)) / lly + 1 / ln2
    range_c = 3 <= lam <= math.log(y) / lly**2
    inner = lam * llx
    range_y = inner > 0 and (
        range_constant * lam * math.log(inner) * llx <= math.log(y) and y <= x
    )
    return LambdaChoice(lam, range_c, bool(range_y))


def thresholds_from_exponents(y: int, exponents) -> list[float]:
    """``delta = (log y)^(-s)`` so that ``delta * y = y / (log y)^s``."""
    return [math.log(y) ** (-s) for s in exponents]


# -- character-sum census ---------------------------------------------------


def _census_block(qs, elements, y, lam, thresholds):
    log_factor = math.log(y) ** (lam * math.log(2) - 1) / y if y > 1 else 0.0
    rows = []
    for q in qs:
        rec = max_primitive_sum_over(UnitGroup(q), elements)
        if rec.empty:
            rows.append(CensusRow(q, 0, 0.0, 0.0, tuple(False for _ in thresholds)))
            continue
        exceeds = tuple(bool(rec.max_abs >= d * y) for d in thresholds)
        rows.append(CensusRow(q, rec.num_primitive, rec.max_abs, rec.max_abs * log_factor, exceeds))
    return rows


def charsum_census(
    x: int,
    y: int,
    thresholds=(),
    lam: float = 3.0,
    threads: int = 1,
    budgets=None,
) -> CensusResult:
    """``max |sum_{a<=y} chi(a)|`` over primitive chi for every ``3 <= q <= x``.

    For each threshold delta, counts moduli with ``max >= delta * y``.  Moduli
    ``q = 2 (mod 4)`` have no primitive characters and get empty rows.
    """
    if x > _budget(budgets, "census"):
        raise BudgetError(f"x={x} exceeds the census budget {_budget(budgets, 'census')}")
    if not 1 <= y <= x:
        raise ValueError("need 1 <= y <= x")
    thresholds = tuple(float(t) for t in thresholds)
    elements = np.arange(1, y + 1, dtype=np.int64)
    moduli = list(range(3, x + 1))
    rows = _map_blocks(
        lambda qs: _census_block(qs, elements, y, lam, thresholds), moduli, threads
    )
    counts = tuple(
        sum(1 for r in rows if not r.empty and r.exceeds[i]) for i in range(len(thresholds))
    )
    return CensusResult(x, y, lam, thresholds, rows, counts)


def _map_blocks(fn, items, threads):
    if threads <= 1 or len(items) < 2 * threads:
        return fn(items)
    size = -(-len(items) // (4 * threads))
    blocks = [items[i : i + size] for i in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(fn, blocks))
    return [row for part in parts for row in part]


def exceptional_set(
    w: int, x: int, y: int, delta: float, tables: Tables | None = None, budgets=None
) -> list[int]:
    """Moduli ``3 <= q <= x`` with ``max_chi |sum_{a in A_w(y)} chi(a)| >= delta * #A_w(y)``."""
    if x > _budget(budgets, "census"):
        raise BudgetError(f"x={x} exceeds the census budget")
    elems = level_set(w, y, tables)
    target = delta * len(elems)
    out = []
    for q in range(3, x + 1):
        rec = max_primitive_sum_over(UnitGroup(q), elems)
        if not rec.empty and rec.max_abs >= target:
            out.append(q)
    return out


# -- moments of N_a(x) ------------------------------------------------------


def moment_report(
    x: int,
    y: int,
    tables: Tables | None = None,
    threads: int = 1,
    D: float = 10.0,
    prime_cutoff: int = DEFAULT_PRIME_CUTOFF,
    budgets=None,
) -> MomentReport:
    """First moment and centred second moment of ``N_a(x)`` over ``-y <= a <= y``."""
    if y < 0:
        raise ValueError("y must be >= 0")
    tables = tables_for(x, tables)
    pi_x = tables.primes.pi(x)
    work = (2 * y + 1) * pi_x
    if work > _budget(budgets, "moments"):
        raise BudgetError(f"moment work {work} exceeds budget")
    counts = na_range(y, x, tables, threads)
    A = artin_constant(prime_cutoff).value
    mean = A * pi_x
    dev = counts.astype(np.float64) - mean
    second = math.fsum((dev * dev).tolist())
    lam = lambda_of(D, x, y).lam if x >= 16 and y >= 16 else math.nan
    return MomentReport(
        x,
        y,
        int(counts.sum()),
        2 * A * y * pi_x,
        second,
        second / (max(y, 1) * pi_x * pi_x),
        lam,
    )


def first_moment(x: int, y: int, **kwargs) -> MomentReport:
    return moment_report(x, y, **kwargs)


def second_moment(x: int, y: int, **kwargs) -> MomentReport:
    return moment_report(x, y, **kwargs)


def phi_ratio_sum(x: int, tables: Tables | None = None) -> float:
    """``sum_{p <= x} phi(p-1)/p``."""
    tables = tables_for(x, tables)
    primes = tables.primes.upto(x)
    phi = tables.mult.phi[primes - 1]
    return math.fsum((phi / primes).tolist())


def titchmarsh_sum(x: int, tables: Tables | None = None) -> TitchmarshResult:
    """``sum_{p <= x} 2^omega(p-1)``."""
    tables = tables_for(x, tables)
    primes = tables.primes.upto(x)
    omega = tables.mult.small_omega[primes - 1].astype(np.int64)
    total = int(np.sum(np.left_shift(1, omega)))
    return TitchmarshResult(x, total, total / x)
