"""Tower construction and arithmetic against brute-force polynomial oracles."""

import random

import pytest
from hypothesis import given, strategies as st

from maxcurves import BudgetError, FieldTower, build_tower


# ---------------------------------------------------------------------------
# oracle helpers: naive dense polynomial arithmetic over F_p
# ---------------------------------------------------------------------------

def poly_rem(num, den, p):
    """Remainder of num by monic den, as a trimmed coefficient list."""
    num = list(num)
    while len(num) >= len(den):
        c = num[-1]
        if c:
            shift = len(num) - len(den)
            for i, dc in enumerate(den):
                num[shift + i] = (num[shift + i] - c * dc) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def all_monic(deg, p):
    def walk(tail):
        if len(tail) == deg:
            yield tail + [1]
            return
        for c in range(p):
            yield from walk(tail + [c])
    yield from walk([])


def is_irreducible_naive(f, p):
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    n = len(f) - 1
    for deg in range(1, n // 2 + 1):
        for g in all_monic(deg, p):
            if not poly_rem(f, g, p):
                return False
    return True


def mult_order(tower, x):
    assert x != 0
    acc, k = x, 1
    while acc != 1:
        acc = tower.mul(acc, x)
        k += 1
    return acc == 1 and k


# ---------------------------------------------------------------------------
# modulus selection
# ---------------------------------------------------------------------------

def test_moduli_are_monic_irreducible(t2, t3, t4, t5, t7, t16):
    for tw in (t2, t3, t4, t5, t7, t16):
        f = list(tw.modulus)
        assert len(f) == tw.degree + 1
        assert f[-1] == 1
        assert is_irreducible_naive(f, tw.p)


def test_moduli_are_lex_first(t2, t3, t4, t5, t7):
    # every lex-smaller tail must be reducible; skipped for degree 16
    # where the scan would dwarf the rest of the suite
    for tw in (t2, t3, t4, t5, t7):
        target = list(tw.modulus[:-1])
        found = None
        for g in all_monic(tw.degree, tw.p):
            if is_irreducible_naive(g, tw.p):
                found = g[:-1]
                break
        assert found == target


def test_frozen_moduli(t2, t3, t16):
    assert t2.modulus == (1, 0, 0, 1, 1)
    assert t3.modulus == (1, 0, 1, 1, 1)
    assert t16.modulus == (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1)


def test_tower_shape(t5):
    assert (t5.p, t5.a, t5.q, t5.q2, t5.q4) == (5, 1, 5, 25, 625)
    assert t5.order == 625
    assert t5.degree == 4


# ---------------------------------------------------------------------------
# the distinguished generator xi of the level-2 unit group
# ---------------------------------------------------------------------------

def test_xi_frozen_values(t2, t3):
    assert t2.coeffs(t2.xi) == (0, 1, 0, 1)
    assert t2.xi == 10
    assert t3.coeffs(t3.xi) == (1, 1, 2, 0)


def test_xi_order_is_q2_minus_1(t2, t3, t4, t5, t16):
    for tw in (t2, t3, t4, t5, t16):
        assert mult_order(tw, tw.xi) == tw.q2 - 1


def test_xi_is_lex_first_generator(t2, t3, t5):
    for tw in (t2, t3, t5):
        for x in tw.elements(2):
            if x and mult_order(tw, x) == tw.q2 - 1:
                assert x == tw.xi
                break


def test_xi_lives_in_level_2(t2, t3, t4, t5, t16):
    for tw in (t2, t3, t4, t5, t16):
        assert tw.in_level(tw.xi, 2)
        assert not tw.in_level(tw.xi, 1)


# ---------------------------------------------------------------------------
# element encoding and level structure
# ---------------------------------------------------------------------------

@given(st.integers(min_value=0, max_value=5 ** 4 - 1))
def test_element_coeffs_round_trip(t5, x):
    cs = t5.coeffs(x)
    assert len(cs) == t5.degree
    assert all(0 <= c < t5.p for c in cs)
    assert t5.element(cs) == x


def test_element_reduces_residues_mod_p(t3):
    assert t3.element((4, 0, 0, 0)) == t3.element((1, 0, 0, 0)) == 1
    assert t3.element((-1, 0, 0, 0)) == t3.element((2, 0, 0, 0))


def test_levels_nest_and_have_right_sizes(t3):
    e1, e2, e4 = t3.elements(1), t3.elements(2), t3.elements(4)
    assert (len(e1), len(e2), len(e4)) == (3, 9, 81)
    assert set(e1) < set(e2) < set(e4)
    assert all(t3.subfield_level(x) == 1 for x in e1)
    assert all(t3.subfield_level(x) == 2 for x in set(e2) - set(e1))
    assert all(t3.subfield_level(x) == 4 for x in set(e4) - set(e2))


def test_elements_sorted_lexicographically(t3, t4):
    for tw in (t3, t4):
        for level in (1, 2, 4):
            els = tw.elements(level)
            keys = [tw.lex_key(x) for x in els]
            assert keys == sorted(keys)
            assert els[0] == 0


def test_in_level_matches_fixed_points_of_power_map(t3):
    for x in t3.elements(4):
        assert t3.in_level(x, 2) == (t3.pow(x, 9) == x)


# ---------------------------------------------------------------------------
# field axioms
# ---------------------------------------------------------------------------

el3 = st.integers(min_value=0, max_value=80)


@given(el3, el3, el3)
def test_additive_group_axioms(t3, x, y, z):
    assert t3.add(x, y) == t3.add(y, x)
    assert t3.add(t3.add(x, y), z) == t3.add(x, t3.add(y, z))
    assert t3.add(x, 0) == x
    assert t3.add(x, t3.neg(x)) == 0
    assert t3.sub(x, y) == t3.add(x, t3.neg(y))


@given(el3, el3, el3)
def test_multiplicative_axioms(t3, x, y, z):
    assert t3.mul(x, y) == t3.mul(y, x)
    assert t3.mul(t3.mul(x, y), z) == t3.mul(x, t3.mul(y, z))
    assert t3.mul(x, 1) == x
    assert t3.mul(x, t3.add(y, z)) == t3.add(t3.mul(x, y), t3.mul(x, z))


@given(el3.filter(bool))
def test_inverses(t3, x):
    assert t3.mul(x, t3.inv(x)) == 1
    assert t3.div(1, x) == t3.inv(x)
    assert t3.pow(x, -1) == t3.inv(x)


@given(el3.filter(bool), st.integers(0, 12), st.integers(0, 12))
def test_power_laws(t3, x, i, j):
    assert t3.pow(x, i + j) == t3.mul(t3.pow(x, i), t3.pow(x, j))


def test_zero_edge_cases(t3):
    assert t3.pow(0, 0) == 1
    assert t3.pow(0, 7) == 0
    with pytest.raises(ZeroDivisionError):
        t3.inv(0)
    with pytest.raises(ZeroDivisionError):
        t3.div(5, 0)
    with pytest.raises(ZeroDivisionError):
        t3.pow(0, -2)


# ---------------------------------------------------------------------------
# table-driven arithmetic vs. raw polynomial arithmetic
# ---------------------------------------------------------------------------

def test_tables_agree_with_raw_multiplication(t5):
    rng = random.Random(7)
    for _ in range(80):
        x, y = rng.randrange(t5.order), rng.randrange(t5.order)
        assert t5.mul(x, y) == t5._mul_raw(x, y)


def test_tableless_tower_matches(t5):
    raw = FieldTower(5, 1, use_tables=False)
    assert raw._exp is None
    assert raw.modulus == t5.modulus
    assert raw.xi == t5.xi
    rng = random.Random(11)
    for _ in range(40):
        x, y = rng.randrange(raw.order), rng.randrange(raw.order)
        assert raw.mul(x, y) == t5.mul(x, y)
        if x:
            assert raw.inv(x) == t5.inv(x)
    assert raw.elements(2) == t5.elements(2)


def test_mul_against_polynomial_oracle(t3):
    rng = random.Random(3)
    mod = list(t3.modulus)
    for _ in range(60):
        x, y = rng.randrange(81), rng.randrange(81)
        prod = poly_mul(list(t3.coeffs(x)), list(t3.coeffs(y)), 3)
        want = t3.element(tuple(poly_rem(prod, mod, 3)) + (0,) * 4)
        assert t3.mul(x, y) == want


# ---------------------------------------------------------------------------
# Frobenius, trace, norm
# ---------------------------------------------------------------------------

def test_frobenius_fixes_exactly_level_2(t3):
    for x in t3.elements(2):
        assert t3.frobenius_k(x) == x
    moved = [x for x in t3.elements(4) if t3.frobenius_k(x) != x]
    assert len(moved) == 81 - 9
    for x in moved[:10]:
        assert t3.frobenius_k(t3.frobenius_k(x)) == x


def test_trace_lands_in_target_level_and_is_additive(t3):
    for x in t3.elements(4)[:20]:
        tr = t3.trace(x, 4, 2)
        assert t3.in_level(tr, 2)
    rng = random.Random(5)
    for _ in range(30):
        x, y = rng.randrange(81), rng.randrange(81)
        assert t3.trace(t3.add(x, y), 4, 1) == \
            t3.add(t3.trace(x, 4, 1), t3.trace(y, 4, 1))


def test_trace_2_to_1_is_onto_level_1(t3):
    image = {t3.trace(x, 2, 1) for x in t3.elements(2)}
    assert image == set(t3.elements(1))


def test_norm_2_to_1_is_the_q_plus_1_power(t3):
    for x in t3.elements(2):
        assert t3.norm(x, 2, 1) == t3.pow(x, 4)
        assert t3.in_level(t3.norm(x, 2, 1), 1)


def test_norm_is_multiplicative(t5):
    rng = random.Random(9)
    for _ in range(30):
        x, y = rng.randrange(625), rng.randrange(625)
        assert t5.norm(t5.mul(x, y), 4, 1) == \
            t5.mul(t5.norm(x, 4, 1), t5.norm(y, 4, 1))


def test_level_validation(t3):
    with pytest.raises(ValueError):
        t3.level_order(3)
    with pytest.raises(ValueError):
        t3.trace(1, 2, 4)
    x4 = next(x for x in t3.elements(4) if not t3.in_level(x, 2))
    with pytest.raises(ValueError):
        t3.trace(x4, 2, 1)


# ---------------------------------------------------------------------------
# construction validation and budgets
# ---------------------------------------------------------------------------

def test_build_tower_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_tower(4, 1)
    with pytest.raises(ValueError):
        build_tower(1, 1)
    with pytest.raises(ValueError):
        build_tower(2, 0)


def test_budget_is_enforced_at_construction():
    with pytest.raises(BudgetError):
        build_tower(2, 1, budget=8)
    # the boundary itself is allowed
    assert build_tower(2, 1, budget=16).q == 2


def test_report_shape(t3):
    rep = t3.report()
    assert rep["modulus"] == [1, 0, 1, 1, 1]
    assert rep["xi"] == [1, 1, 2, 0]
    assert rep == {"p": 3, "a": 1, "q": 3,
                   "modulus": [1, 0, 1, 1, 1], "xi": [1, 1, 2, 0]}
