"""The compiled and numpy kernels must produce identical results."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinlab._kernels import available_backends, get_backend

from oracles import count_na_bruteforce, mult_order, primes_upto

BACKENDS = available_backends()


@pytest.fixture(params=BACKENDS)
def kern(request):
    return get_backend(request.param)


def test_both_backends_present():
    # the compiled extension is part of the build; its absence is a packaging bug
    assert "cython" in BACKENDS


@pytest.mark.parametrize("limit", [2, 3, 4, 30, 997, 10**5])
def test_spf_sieve_agrees(kern, limit):
    spf, primes = kern.spf_sieve(limit)
    ref_spf, ref_primes = get_backend("python").spf_sieve(limit)
    assert np.array_equal(spf, ref_spf) and np.array_equal(primes, ref_primes)
    assert primes.tolist() == primes_upto(limit)


def test_mult_tables_agree(kern):
    spf, _ = kern.spf_sieve(5 * 10**4)
    got = kern.mult_tables(spf)
    ref = get_backend("python").mult_tables(spf)
    for g, r in zip(got, ref):
        assert np.array_equal(g, r)


@settings(max_examples=60, deadline=None)
@given(m=st.integers(2, 10**9), g=st.integers(0, 10**12), n=st.integers(0, 300))
def test_power_table(m, g, n):
    expected = [pow(g, k, m) for k in range(n)]
    for name in BACKENDS:
        assert get_backend(name).power_table(g, m, n).tolist() == expected


def test_primitive_root_flags(kern):
    spf, primes = kern.spf_sieve(2000)
    for a in (-7, -2, -1, 0, 1, 2, 3, 10, 12, 2**40 + 1):
        flags = kern.primitive_root_flags(a, primes, spf)
        expected = [mult_order(a, p) == p - 1 for p in primes.tolist()]
        assert flags.astype(bool).tolist() == expected


def test_na_counts_small_case(kern):
    spf, primes = kern.spf_sieve(10)
    # a = -2..2 over primes 2, 3, 5, 7
    assert kern.na_counts(primes, spf, 2).tolist() == [2, 2, 0, 1, 2]


def test_na_counts_match_bruteforce(kern):
    spf, primes = kern.spf_sieve(300)
    counts = kern.na_counts(primes, spf, 25)
    assert counts.tolist() == [count_na_bruteforce(a, 300) for a in range(-25, 26)]


def test_na_counts_agree_across_backends():
    spf, primes = get_backend("python").spf_sieve(5000)
    results = [get_backend(b).na_counts(primes, spf, 700) for b in BACKENDS]
    for r in results[1:]:
        assert np.array_equal(r, results[0])


def test_import_time_selection():
    code = "import artinlab._kernels as k; from artinlab import count_na; print(k.BACKEND, count_na(2, 100))"
    env = dict(os.environ, ARTINLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split() == ["python", "12"]
    env.pop("ARTINLAB_PURE_PYTHON")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split() == ["cython", "12"]
