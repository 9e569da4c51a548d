"""Bounds, the nm1 dichotomy, model normalization, and the grid scans."""

import pytest
from hypothesis import given, strategies as st

from maxcurves import (
    BRANCH_CONJ,
    BRANCH_FULL,
    BRANCH_NONE,
    SyntheticInstance,
    bounds_report,
    castelnuovo_bound,
    conjecture_explore,
    define_curve,
    dichotomy_check,
    embedding_check,
    genus_interval_classify,
    normalize_model,
    quarter_genus_check,
)


# ---------------------------------------------------------------------------
# genus bounds
# ---------------------------------------------------------------------------

def test_castelnuovo_values():
    assert castelnuovo_bound(1, 2) == 2
    assert castelnuovo_bound(1, 3) == 6
    assert castelnuovo_bound(2, 4) == 4
    assert castelnuovo_bound(2, 5) == 8
    assert castelnuovo_bound(3, 5) == 4
    with pytest.raises(ValueError):
        castelnuovo_bound(0, 5)
    with pytest.raises(ValueError):
        castelnuovo_bound(2, 1)


def test_bounds_reports_all_pass(h32, h23, h43, h25, h35, add45):
    for curve in (h32, h23, h43, h25, h35, add45):
        rep = bounds_report(curve)
        assert rep.all_ok
        assert rep.hasse_weil_ok
        assert rep.castelnuovo_ok
        assert rep.lewittes_genus_ok and rep.lewittes_count_ok
        assert rep.global_genus_ok
        assert rep.rational_count == curve.count(2)


def test_bounds_first_nongap_and_attainment(h32, h23, h43, h25, h35, add45):
    m1 = {h32: 2, h23: 2, h43: 3, h25: 2, h35: 3, add45: 2}
    n = {h32: 1, h23: 2, h43: 1, h25: 3, h35: 2, add45: 2}
    for curve in m1:
        rep = bounds_report(curve)
        assert rep.m1 == m1[curve]
        assert rep.n == n[curve]
        # every worked instance meets its Castelnuovo value exactly
        assert rep.castelnuovo_attained
        assert 2 * curve.genus == rep.castelnuovo_value


def test_bounds_hold_even_off_maximality(nonmax):
    rep = bounds_report(nonmax)
    assert not rep.hasse_weil_ok  # 10 points, far from 46
    assert rep.lewittes_count_ok
    assert rep.n == 0  # d = 7 > q + 1 collapses the system
    assert rep.castelnuovo_value is None
    assert rep.castelnuovo_ok and not rep.castelnuovo_attained
    assert not rep.all_ok


# ---------------------------------------------------------------------------
# normalization of twisted trace models
# ---------------------------------------------------------------------------

def test_normalize_identity_model(t3):
    res = normalize_model(t3, 1, 1, 2)
    assert res.power_index == 0
    assert res.y_scale == 1
    assert res.x_scale == 1
    assert res.verified


def test_normalize_twisted_round_trip(t3, t5):
    # substitute y -> beta y, x -> gamma x in the plain trace model and
    # confirm the computed scales restore a verified trace form
    for tower, m in ((t3, 2), (t5, 3)):
        q = tower.q
        for be in (1, 2, 3):
            for ge in (1, 2):
                beta = tower.pow(tower.xi, be)
                gamma = tower.pow(tower.xi, ge)
                gm = tower.inv(tower.pow(gamma, m))
                a = tower.mul(tower.pow(beta, q), gm)
                b = tower.mul(beta, gm)
                res = normalize_model(tower, a, b, m)
                assert res.verified
                assert 0 <= res.power_index < (q + 1) // m
                assert res.y_scale != 0 and res.x_scale != 0


def test_normalize_rejects_degenerate_left_side(t3):
    # -b/a = xi is not a (q-1)-th power, so F is injective on k and the
    # value set cannot be a scaled subfield line
    b = t3.neg(t3.xi)
    with pytest.raises(ValueError):
        normalize_model(t3, 1, b, 2)


def test_normalize_validation(t3):
    with pytest.raises(ValueError):
        normalize_model(t3, 1, 1, 3)  # m does not divide q + 1
    with pytest.raises(ValueError):
        normalize_model(t3, 0, 1, 2)
    with pytest.raises(ValueError):
        normalize_model(t3, 1, 0, 2)


# ---------------------------------------------------------------------------
# the nm1 dichotomy
# ---------------------------------------------------------------------------

def test_dichotomy_first_branch(h23, h25, h35):
    for curve in (h23, h25, h35):
        v = dichotomy_check(curve)
        assert v.branch == BRANCH_FULL
        assert v.product == v.q + 1
        assert v.genus_identity_ok
        assert 2 * v.genus == (v.m1 - 1) * (v.q - 1)
        assert v.conjecture_flag is None
        assert v.normalization is not None and v.normalization.verified


def test_dichotomy_second_branch(h32, h43, add45):
    for curve in (h32, h43, add45):
        v = dichotomy_check(curve)
        assert v.branch == BRANCH_CONJ
        assert v.product == v.q
        assert v.conjecture_flag is True
        assert v.genus_identity_ok is None
        assert v.normalization is None


def test_dichotomy_second_branch_large(t16):
    curve = define_curve(t16, (1, 0, 1), 17)
    v = dichotomy_check(curve)
    assert (v.q, v.genus, v.n, v.m1) == (16, 24, 4, 4)
    assert v.branch == BRANCH_CONJ
    assert v.conjecture_flag is True


def test_dichotomy_synthetic_instances():
    v = dichotomy_check(SyntheticInstance(q=7, genus=9, n=2, m1=4))
    assert v.branch == BRANCH_FULL and v.genus_identity_ok
    v = dichotomy_check(SyntheticInstance(q=7, genus=8, n=2, m1=4))
    assert v.branch == BRANCH_FULL and not v.genus_identity_ok
    v = dichotomy_check(SyntheticInstance(q=7, genus=21, n=1, m1=7))
    assert v.branch == BRANCH_CONJ and v.conjecture_flag
    v = dichotomy_check(SyntheticInstance(q=7, genus=5, n=2, m1=3))
    assert v.branch == BRANCH_NONE
    assert v.genus_identity_ok is None and v.conjecture_flag is None


def test_dichotomy_requires_maximality(nonmax):
    with pytest.raises(ValueError):
        dichotomy_check(nonmax)


# ---------------------------------------------------------------------------
# genus interval classification
# ---------------------------------------------------------------------------

def test_interval_frozen_instances(h32, h43, h35, add45):
    cls = genus_interval_classify(5, 4, n=2)  # the (3, 5) curve
    assert cls.t == 2 and cls.attains_upper and cls.consistent
    cls = genus_interval_classify(4, 2, n=2)  # the additive d = 5 curve
    assert cls.t == 2 and not cls.attains_upper
    assert cls.upper_bound == 4.5 and cls.consistent
    cls = genus_interval_classify(3, 3, n=1)  # the full norm-trace curve
    assert cls.t == 1 and cls.attains_upper and cls.consistent
    cls = genus_interval_classify(2, 1, n=1)
    assert cls.t == 1 and cls.attains_upper and cls.consistent


def test_interval_without_n_leaves_consistency_open():
    cls = genus_interval_classify(5, 4)
    assert cls.n is None and cls.consistent is None


@given(st.integers(2, 9), st.integers(1, 100))
def test_interval_brackets_two_genus(q, g):
    if 2 * g > (q - 1) * q:
        with pytest.raises(ValueError):
            genus_interval_classify(q, g)
        return
    cls = genus_interval_classify(q, g)
    assert cls.t >= 1
    assert cls.next_upper < 2 * g <= cls.upper_bound
    assert cls.attains_upper == (cls.upper_bound == 2 * g)


def test_interval_validation():
    with pytest.raises(ValueError):
        genus_interval_classify(1, 1)
    with pytest.raises(ValueError):
        genus_interval_classify(5, 0)


# ---------------------------------------------------------------------------
# the quarter-genus scan
# ---------------------------------------------------------------------------

def test_quarter_genus_small_odd_q(t3, t5):
    for tower in (t3, t5):
        rep = quarter_genus_check(tower)
        assert rep.ok
        assert rep.genus_ok and rep.maximal and rep.branch_ok
        assert rep.scanned == ()  # no multiplicities to eliminate yet


def test_quarter_genus_q7(t7):
    rep = quarter_genus_check(t7)
    assert rep.ok
    assert rep.m == 4 and rep.genus == 9
    assert len(rep.scanned) == 1
    rec = rep.scanned[0]
    assert rec.m == 5
    assert rec.sieve_genus == 7
    assert rec.selmer_bound == 16
    assert rec.eliminated
    assert rep.all_eliminated


def test_quarter_genus_needs_odd_q(t4):
    with pytest.raises(ValueError):
        quarter_genus_check(t4)


# ---------------------------------------------------------------------------
# the projective embedding check
# ---------------------------------------------------------------------------

def test_embedding_rationality(h32, h23, h43, h35):
    for curve in (h32, h23, h43, h35):
        rep = embedding_check(curve)
        assert rep.ok
        assert rep.matches and rep.infinity_ok
        assert rep.points_checked == curve.count(4) - 1
        assert rep.rational_points == curve.count(2) - 1
        assert rep.rational_images == rep.rational_points


def test_embedding_preconditions(add45, nonmax):
    with pytest.raises(ValueError):
        embedding_check(add45)  # n * d = 10 != q + 1
    with pytest.raises(ValueError):
        embedding_check(nonmax)  # not the trace family


# ---------------------------------------------------------------------------
# the second-branch grid scan
# ---------------------------------------------------------------------------

def test_conjecture_scan_q4(t4):
    rep = conjecture_explore(t4, 2)
    assert rep.complete
    assert rep.d == 5
    assert rep.tested == 5
    assert rep.skipped_equivalent == 10
    assert rep.spent == rep.tested * 16
    assert len(rep.hits) == 1
    hit = rep.hits[0]
    assert hit.count == 33 and hit.genus == 2 and hit.n == 2
    assert hit.two_g_matches and hit.n_m1_matches
    # the reported representative is equivalent to the plain model (1, 1):
    # rescaling x by a d-th power maps a_0 to a_0 * c^(1 - m1)
    t = t4
    scalers = {t.pow(z, 5) for z in t.elements(2) if z}
    orbit = {t.mul(hit.f_coeffs[0], t.pow(c, -1)) for c in scalers}
    assert 1 in orbit
    assert hit.f_coeffs[1] == 1


def test_conjecture_scan_q2(t2):
    rep = conjecture_explore(t2, 2)
    assert rep.complete
    assert rep.tested == 3 and rep.skipped_equivalent == 0
    assert len(rep.hits) == 1
    assert rep.hits[0].f_coeffs == (1, 1)
    assert rep.hits[0].count == 9


def test_conjecture_scan_partial_budget(t4):
    rep = conjecture_explore(t4, 2, budget=32)
    assert not rep.complete
    assert rep.tested == 2
    assert rep.spent == 32
    assert rep.budget == 32


def test_conjecture_scan_validation(t4):
    with pytest.raises(ValueError):
        conjecture_explore(t4, 3)  # not a power of the characteristic
    with pytest.raises(ValueError):
        conjecture_explore(t4, 8)  # exceeds q
    with pytest.raises(ValueError):
        conjecture_explore(t4, 2, d=4)  # d divisible by p
