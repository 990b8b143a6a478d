from math import gcd, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinlab.arith import (
    Factorization,
    factor,
    is_probable_prime,
    mod_pow,
    mult_invariants,
    power_exponent,
    squarefree_decompose,
)

from oracles import is_prime, mobius, phi_count, trial_factor


def test_factor_examples():
    assert factor(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factor(1).factors == ()
    assert factor(9973).factors == ((9973, 1),)


def test_factor_rejects_zero_and_overflow():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(2**63)


def test_factor_matches_trial_division_small_range():
    for n in range(1, 10**4 + 1):
        assert dict(factor(n).factors) == trial_factor(n)


@pytest.mark.parametrize(
    "n",
    [
        2**63 - 25,  # prime
        (2**31 - 1) * (2**31 + 11),
        2147483647 * 4294967291,
        1000003 * 1000033 * 1000037,
        2**61 - 1,
        3**39,
        (2**21 + 23) ** 2 * 7,
    ],
)
def test_factor_large(n):
    f = factor(n)
    assert f.value() == n
    assert all(is_probable_prime(p) for p in f.primes)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=2**63 - 1))
def test_factor_reassembles(n):
    f = factor(n)
    assert f.value() == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_probable_prime(p) for p in f.primes)


def test_miller_rabin_agrees_with_trial_division():
    assert [n for n in range(5000) if is_probable_prime(n)] == [
        n for n in range(5000) if is_prime(n)
    ]
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_probable_prime(n)


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))


@pytest.mark.parametrize(
    "n, expected",
    [(12, (0, 4, 3, 2)), (30, (-1, 8, 3, 3)), (1, (1, 1, 0, 0))],
)
def test_mult_invariants_examples(n, expected):
    assert tuple(mult_invariants(factor(n))) == expected


def test_mult_invariants_bruteforce():
    for n in range(1, 10**4 + 1, 7):
        inv = mult_invariants(factor(n))
        tf = trial_factor(n)
        assert inv.mu == mobius(n)
        assert inv.big_omega == sum(tf.values())
        assert inv.small_omega == len(tf)
    for n in range(1, 800):
        assert mult_invariants(factor(n)).phi == phi_count(n)


@pytest.mark.parametrize("a, b, m, neg", [(12, 3, 2, False), (8, 2, 2, False), (-12, 3, 2, True)])
def test_squarefree_examples(a, b, m, neg):
    d = squarefree_decompose(a)
    assert (d.b, d.m, d.negative) == (b, m, neg)


def test_squarefree_reassembly():
    for a in range(2, 10**4 + 1):
        for s in (a, -a):
            d = squarefree_decompose(s)
            assert d.b * d.m**2 == a
            assert all(e == 1 for e in trial_factor(d.b).values())
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_power_exponent_examples():
    assert power_exponent(64).h == 6
    assert power_exponent(-8).h == 3
    assert power_exponent(7).h == 1
    assert power_exponent(-64).h == 3
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            power_exponent(bad)


def _is_perfect_power(a, h):
    if a < 0:
        if h % 2 == 0:
            return False
        a = -a
    r = round(a ** (1 / h))
    return any((r + d) ** h == a for d in (-1, 0, 1) if r + d >= 0)


def test_power_exponent_is_maximal():
    small_primes = [2, 3, 5, 7, 11, 13, 17, 19]
    for a in list(range(2, 3000)) + [4**10, 6**7, 10**6, 2**19, 3**12 * 5**6]:
        for s in (a, -a):
            h = power_exponent(s).h
            assert _is_perfect_power(s, h)
            for p in small_primes:
                assert not _is_perfect_power(s, h * p)


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(3, 100, 101) == 1
    with pytest.raises(ValueError):
        mod_pow(2, 3, 1)


def test_euler_theorem():
    for m in range(2, 501):
        phi = mult_invariants(factor(m)).phi
        for a in range(1, m):
            if gcd(a, m) == 1:
                assert mod_pow(a, phi, m) == 1


def test_mod_pow_large_operands():
    m = 2**63 - 25
    assert mod_pow(m - 1, 2, m) == 1
    assert mod_pow(3, m - 1, m) == 1
    assert isqrt(mod_pow(10**18, 1, m)) == 10**9
