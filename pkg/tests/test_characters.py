import cmath
import math
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinlab.characters import (
    UnitGroup,
    build_unit_group,
    char_sum,
    char_sum_symmetric,
    char_value,
    char_values,
    character_sums,
    conductor,
    conductor_bruteforce,
    enumerate_characters,
    enumerate_primitive,
    max_primitive_char_sum,
    max_primitive_sum_over,
    num_primitive,
)
from artinlab.errors import BudgetError

from oracles import legendre, phi_count


def _quadratic(group):
    return next(chi for chi in enumerate_characters(group) if chi.order == 2)


def test_unit_group_examples():
    assert build_unit_group(7).orders == (6,)
    assert build_unit_group(7).generators == (3,)
    g8 = build_unit_group(8)
    assert g8.orders == (2, 2) and g8.generators == (7, 5)
    g15 = build_unit_group(15)
    assert sorted(g15.orders) == [2, 4] and g15.phi == 8


def test_unit_group_limits():
    with pytest.raises(ValueError):
        UnitGroup(0)
    with pytest.raises(BudgetError):
        UnitGroup(10**7 + 1)
    assert build_unit_group(1).phi == build_unit_group(2).phi == 1


@pytest.mark.parametrize("q", [3, 4, 8, 9, 15, 16, 24, 45, 64, 100, 105, 343, 720])
def test_dlog_round_trip(q):
    g = build_unit_group(q)
    assert g.phi == phi_count(q)
    units = [a for a in range(q) if gcd(a, q) == 1]
    assert sorted(g.recombine(g.dlog(a)) for a in units) == units
    idx = g.dlog_index
    assert sorted(idx[idx >= 0].tolist()) == list(range(g.phi))
    with pytest.raises(ValueError):
        g.dlog(0)


def test_quadratic_mod5_is_legendre():
    g = build_unit_group(5)
    chi = _quadratic(g)
    assert abs(char_value(g, chi, 2) + 1) < 1e-12
    for p in (5, 7, 11, 13, 101):
        g = build_unit_group(p)
        chi = _quadratic(g)
        vals = char_values(g, chi, np.arange(1, p)).real
        assert np.allclose(vals, [legendre(a, p) for a in range(1, p)])


def test_principal_and_zero_values():
    g = build_unit_group(12)
    chi0 = g.character((0,) * g.rank)
    assert chi0.principal and chi0.conductor == 1
    for a in (1, 5, 7, 11):
        assert char_value(g, chi0, a) == 1
    for chi in enumerate_characters(g):
        for a in (0, 2, 3, 6, 9):
            assert char_value(g, chi, a) == 0


def test_conductor_examples():
    g9 = build_unit_group(9)
    assert g9.character((3,)).conductor == 3
    g7 = build_unit_group(7)
    assert {chi.conductor for chi in enumerate_characters(g7) if not chi.principal} == {7}
    assert sorted(chi.conductor for chi in enumerate_characters(build_unit_group(8))) == [1, 4, 8, 8]
    assert sorted(chi.conductor for chi in enumerate_characters(build_unit_group(12))) == [
        1, 3, 4, 12,
    ]


def test_primitive_counts():
    assert num_primitive(build_unit_group(5)) == 3
    assert num_primitive(build_unit_group(8)) == 2
    assert num_primitive(build_unit_group(12)) == 1
    for q in (6, 10, 14, 30):
        assert num_primitive(build_unit_group(q)) == 0
    for p in (3, 11, 53):
        assert len(list(enumerate_primitive(build_unit_group(p)))) == p - 2


@pytest.mark.parametrize("q", range(1, 121))
def test_conductor_formula_matches_bruteforce(q):
    g = build_unit_group(q)
    chars = list(enumerate_characters(g))
    assert len(chars) == phi_count(q)
    for chi in chars:
        assert chi.conductor == conductor_bruteforce(g, chi)
        assert q % chi.conductor == 0
    assert num_primitive(g) == sum(chi.primitive for chi in chars)


@settings(max_examples=40, deadline=None)
@given(q=st.integers(2, 400), data=st.data())
def test_multiplicativity(q, data):
    g = build_unit_group(q)
    chi = g.character_at(data.draw(st.integers(0, g.phi - 1)))
    a = data.draw(st.integers(-10**6, 10**6))
    b = data.draw(st.integers(-10**6, 10**6))
    lhs = char_value(g, chi, a * b)
    rhs = char_value(g, chi, a) * char_value(g, chi, b)
    assert abs(lhs - rhs) < 1e-9
    assert abs(char_value(g, chi, a + q) - char_value(g, chi, a)) < 1e-12


@pytest.mark.parametrize("q", [5, 8, 12, 21, 32, 60])
def test_orthogonality(q):
    g = build_unit_group(q)
    vals = np.array([char_values(g, chi, np.arange(q)) for chi in enumerate_characters(g)])
    gram = vals @ vals.conj().T
    assert np.allclose(gram, g.phi * np.eye(g.phi), atol=1e-9)


@pytest.mark.parametrize("p", [7, 13, 31, 97])
def test_order_census_prime(p):
    g = build_unit_group(p)
    orders = [chi.order for chi in enumerate_characters(g)]
    for t in range(1, p):
        if (p - 1) % t == 0:
            assert orders.count(t) == phi_count(t)


def test_char_sum_examples():
    g = build_unit_group(5)
    chi = _quadratic(g)
    assert abs(char_sum(g, chi, 4)) < 1e-12
    g3 = build_unit_group(3)
    chi0 = g3.character((0,))
    assert char_sum(g3, chi0, 7) == pytest.approx(5)
    assert char_sum_symmetric(g3, chi0, 2) == pytest.approx(4)
    with pytest.raises(ValueError):
        char_sum(g3, chi0, 0)


@settings(max_examples=50, deadline=None)
@given(q=st.integers(3, 200), y=st.integers(1, 700), data=st.data())
def test_char_sum_matches_direct_and_symmetric(q, y, data):
    g = build_unit_group(q)
    chi = g.character_at(data.draw(st.integers(0, g.phi - 1)))
    direct = sum(char_value(g, chi, a) for a in range(1, y + 1))
    s = char_sum(g, chi, y)
    assert abs(s - direct) < 1e-8
    parity = char_value(g, chi, -1)
    assert abs(char_sum_symmetric(g, chi, y) - (1 + parity) * s) < 1e-8


@pytest.mark.parametrize("q", [7, 16, 45, 101])
def test_polya_vinogradov(q):
    g = build_unit_group(q)
    bound = math.sqrt(q) * math.log(q) + 1
    for chi in enumerate_primitive(g):
        partial = np.cumsum(char_values(g, chi, np.arange(1, q + 1)))
        assert np.abs(partial).max() <= bound


def test_max_primitive_q5():
    g = build_unit_group(5)
    for method in ("fft", "naive"):
        rec = max_primitive_char_sum(g, 2, method=method)
        assert rec.max_abs == pytest.approx(math.sqrt(2))
        assert rec.num_primitive == 3
        assert g.character(rec.argmax_c).order == 4


def test_empty_record_for_2_mod_4():
    rec = max_primitive_char_sum(build_unit_group(18), 10)
    assert rec.empty and rec.num_primitive == 0 and rec.argmax_c is None
    with pytest.raises(ValueError):
        max_primitive_char_sum(build_unit_group(5), 3, method="bogus")


@pytest.mark.parametrize("q", [3, 4, 8, 9, 12, 20, 27, 40, 64, 77, 128, 180, 243])
def test_fft_matches_naive(q):
    g = build_unit_group(q)
    for y in (1, 5, q // 2 + 1, 3 * q):
        fast = max_primitive_char_sum(g, y, "fft")
        slow = max_primitive_char_sum(g, y, "naive")
        assert abs(fast.max_abs - slow.max_abs) < 1e-6
        assert 0 <= fast.max_abs <= y


def test_character_sums_against_values():
    g = build_unit_group(36)
    elems = np.array([1, 5, 7, 11, 13, 35, 100, 2, 4])
    sums = character_sums(g, elems)
    for i in range(g.phi):
        chi = g.character_at(i)
        assert abs(sums[i] - char_values(g, chi, elems).sum()) < 1e-9


def test_max_over_element_set():
    g = build_unit_group(13)
    elems = [1, 2, 4, 8]
    fast = max_primitive_sum_over(g, elems)
    slow = max_primitive_sum_over(g, elems, method="naive")
    assert fast.max_abs == pytest.approx(slow.max_abs)
    best = max(abs(sum(char_value(g, chi, a) for a in elems)) for chi in enumerate_primitive(g))
    assert fast.max_abs == pytest.approx(best)


def test_phase_is_exact_root_of_unity():
    g = build_unit_group(63)
    for chi in enumerate_characters(g):
        for a in (2, 5, 62):
            v = char_value(g, chi, a)
            assert abs(v**chi.order - 1) < 1e-9
            assert abs(abs(v) - 1) < 1e-12
    assert cmath.isclose(char_value(g, g.character((0, 0)), 2), 1)
