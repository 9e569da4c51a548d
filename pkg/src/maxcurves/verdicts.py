"""Global verdicts about maximal curves: bounds, dichotomies, searches.

Everything here reduces a structural claim to finite checks on a
concrete tower: point counts, semigroup sieves, interval membership
over exact fractions, or exhaustive grids with explicit budgets.
Conjectural identities are always reported as flags, never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve_model import INFINITY, CurveModel, define_curve, hermitian_curve
from .field_tower import FieldTower
from .function_field import rr_basis, x_of, y_of
from .weierstrass import selmer_upper_bound, semigroup_gaps


def _system_n(curve: CurveModel) -> int:
    return rr_basis(curve, curve.tower.q + 1).dimension - 2


def _first_nongap(curve: CurveModel) -> int:
    return min(curve.deg_f, curve.d)


# ---------------------------------------------------------------------------
# classical genus and point-count bounds
# ---------------------------------------------------------------------------

def castelnuovo_bound(n: int, q: int) -> int:
    """Upper bound for 2g of a degree q+1 system with projective rank n+1."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    big_m = q // n
    e = q - big_m * n
    return big_m * (q - n + e)


@dataclass(frozen=True)
class BoundsReport:
    rational_count: int
    expected_maximal_count: int
    hasse_weil_ok: bool
    m1: int
    n: int
    castelnuovo_value: int | None
    castelnuovo_ok: bool
    castelnuovo_attained: bool
    lewittes_genus_ok: bool
    lewittes_count_ok: bool
    global_genus_ok: bool
    all_ok: bool


def bounds_report(curve: CurveModel) -> BoundsReport:
    tower = curve.tower
    q = tower.q
    g = curve.genus
    count = curve.count(2)
    expected = q * q + 2 * g * q + 1
    hasse = count == expected
    m1 = _first_nongap(curve)
    n = _system_n(curve)
    # a degenerate system (n = 0 when d > q + 1) carries no rank bound
    cast = castelnuovo_bound(n, q) if n >= 1 else None
    cast_ok = cast is None or 2 * g <= cast
    lew_g = 2 * g <= q * (m1 - 1)
    lew_c = count <= q * q * m1 + 1
    glob = 2 * g <= (q - 1) * q
    all_ok = hasse and cast_ok and lew_g and lew_c and glob
    return BoundsReport(
        rational_count=count,
        expected_maximal_count=expected,
        hasse_weil_ok=hasse,
        m1=m1,
        n=n,
        castelnuovo_value=cast,
        castelnuovo_ok=cast_ok,
        castelnuovo_attained=cast is not None and 2 * g == cast,
        lewittes_genus_ok=lew_g,
        lewittes_count_ok=lew_c,
        global_genus_ok=glob,
        all_ok=all_ok,
    )


# ---------------------------------------------------------------------------
# model normalization for trace-shaped equations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizationResult:
    """Scalings (X, Y) = (x_scale * x, y_scale * y) reaching Y^q + Y = X^m.

    power_index is the exponent class i of the value set of the left
    side: it equals xi^(i*m) times the level-1 subfield.
    """

    power_index: int
    y_scale: int
    x_scale: int
    verified: bool


def normalize_model(tower: FieldTower, a: int, b: int, m: int) -> NormalizationResult:
    """Normalize a maximal model a*y^q + b*y = x^m to the plain trace form."""
    q = tower.q
    if m < 2 or (q + 1) % m:
        raise ValueError("m must divide q + 1 and exceed 1")
    for c in (a, b):
        if not 0 < c < tower.order or not tower.in_level(c, 2):
            raise ValueError("coefficients must be nonzero elements of the level-2 field")
    coeffs = (b,) + (0,) * (tower.a - 1) + (a,)
    curve = define_curve(tower, coeffs, m)
    if not curve.is_maximal:
        raise ValueError("the model is not maximal; nothing to normalize")
    n = (q + 1) // m
    level1 = tower.elements(1)
    image = {curve.f_eval(y) for y in tower.elements(2)}
    index = None
    for i in range(n):
        scale = tower.pow(tower.xi, i * m)
        if image == {tower.mul(scale, z) for z in level1}:
            index = i
            break
    if index is None:
        raise ValueError("the value set of the left side is not a scaled subfield line")
    unscale = tower.pow(tower.xi, -index * m)
    targets = [tower.mul(unscale, curve.f_eval(alpha)) for alpha in (1, tower.xi)]
    eps = None
    for cand in tower.elements(2):
        if cand and all(tower.trace(tower.mul(cand, alpha), 2, 1) == t
                        for alpha, t in zip((1, tower.xi), targets)):
            eps = cand
            break
    if eps is None:
        raise RuntimeError("trace characterization failed; unreachable on a field")
    x_scale = tower.pow(tower.xi, -index)
    ey = y_of(curve).scaled(eps)
    ex = x_of(curve).scaled(x_scale)
    residual = ey ** q + ey - ex ** m
    return NormalizationResult(
        power_index=index,
        y_scale=eps,
        x_scale=x_scale,
        verified=residual.is_zero,
    )


# ---------------------------------------------------------------------------
# the two-branch dichotomy at the first nongap
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SyntheticInstance:
    """Numeric stand-in for a curve when only invariants are known."""

    q: int
    genus: int
    n: int
    m1: int


BRANCH_FULL = "nm1-equals-q-plus-1"
BRANCH_CONJ = "nm1-equals-q"
BRANCH_NONE = "hypothesis-not-met"


@dataclass(frozen=True)
class DichotomyVerdict:
    q: int
    genus: int
    n: int
    m1: int
    product: int
    branch: str
    genus_identity_ok: bool | None
    conjecture_flag: bool | None
    normalization: NormalizationResult | None


def dichotomy_check(instance: CurveModel | SyntheticInstance) -> DichotomyVerdict:
    """Sort a maximal curve into the nm1 = q+1 / nm1 = q branches.

    On the first branch the genus identity 2g = (m1-1)(q-1) is a
    theorem and trace-shaped models are normalized as a witness; on the
    second, 2g = (m1-1)q is reported as a conjecture flag only.
    """
    curve = None
    if isinstance(instance, CurveModel):
        curve = instance
        if not curve.is_maximal:
            raise ValueError("the dichotomy applies to maximal curves only")
        q = curve.tower.q
        g = curve.genus
        n = _system_n(curve)
        m1 = _first_nongap(curve)
    else:
        q, g, n, m1 = instance.q, instance.genus, instance.n, instance.m1
    prod = n * m1
    identity_ok = None
    conj = None
    norm = None
    if prod == q + 1:
        branch = BRANCH_FULL
        identity_ok = 2 * g == (m1 - 1) * (q - 1)
        if curve is not None and curve.d == m1 and _is_trace_shaped(curve):
            norm = normalize_model(
                curve.tower, curve.f_coeffs[-1], curve.f_coeffs[0], curve.d)
    elif prod == q:
        branch = BRANCH_CONJ
        conj = 2 * g == (m1 - 1) * q
    else:
        branch = BRANCH_NONE
    return DichotomyVerdict(
        q=q, genus=g, n=n, m1=m1, product=prod, branch=branch,
        genus_identity_ok=identity_ok, conjecture_flag=conj, normalization=norm,
    )


def _is_trace_shaped(curve: CurveModel) -> bool:
    c = curve.f_coeffs
    return len(c) == curve.tower.a + 1 and not any(c[1:-1])


# ---------------------------------------------------------------------------
# genus intervals over exact fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalClassification:
    q: int
    genus: int
    t: int
    upper_bound: Fraction
    next_upper: Fraction
    attains_upper: bool
    n: int | None
    consistent: bool | None


def genus_interval_classify(q: int, genus: int, n: int | None = None) -> IntervalClassification:
    """Place 2g in its interval ((q-1)((q+1)/(t+1)-1), (q-1)((q+1)/t-1)]."""
    if q < 2:
        raise ValueError("need q >= 2")
    if genus < 1:
        raise ValueError("genus must be positive to classify")

    def upper(t: int) -> Fraction:
        return Fraction((q - 1) * (q + 1 - t), t)

    two_g = 2 * genus
    if two_g > upper(1):
        raise ValueError("genus exceeds the global bound (q-1)q/2")
    t = 1
    while upper(t + 1) >= two_g:
        t += 1
    attains = Fraction(two_g) == upper(t)
    consistent = None
    if n is not None:
        consistent = t == n if attains else t >= n
    return IntervalClassification(
        q=q, genus=genus, t=t, upper_bound=upper(t), next_upper=upper(t + 1),
        attains_upper=attains, n=n, consistent=consistent,
    )


# ---------------------------------------------------------------------------
# the quarter-genus gap scan for odd q
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRecord:
    m: int
    sieve_genus: int
    selmer_bound: int
    eliminated: bool


@dataclass(frozen=True)
class QuarterGenusReport:
    q: int
    m: int
    genus: int
    genus_ok: bool
    maximal: bool
    branch_ok: bool
    scanned: tuple[ScanRecord, ...]
    all_eliminated: bool
    ok: bool


def quarter_genus_check(tower: FieldTower) -> QuarterGenusReport:
    """Confirm the (q-1)^2/4 witness and eliminate multiplicities above it.

    The witness is the curve with m = (q+1)/2; every candidate first
    nongap strictly between (q+1)/2 and q-1 is ruled out because the
    densest admissible semigroup already has too small a genus.
    """
    q = tower.q
    if q % 2 == 0:
        raise ValueError("the quarter-genus analysis needs odd q")
    m_half = (q + 1) // 2
    quarter = (q - 1) * (q - 1) // 4
    curve = hermitian_curve(tower, m_half)
    genus_ok = curve.genus == quarter
    maximal = curve.is_maximal
    verdict = dichotomy_check(curve) if maximal else None
    branch_ok = verdict is not None and verdict.branch == BRANCH_FULL \
        and bool(verdict.genus_identity_ok)
    records = []
    for m in range((q + 3) // 2, q - 1):
        if math.gcd(m, q) != 1:
            continue
        sieve = len(semigroup_gaps((m, q, q + 1)))
        sel = selmer_upper_bound(m, q)
        records.append(ScanRecord(
            m=m,
            sieve_genus=sieve,
            selmer_bound=sel.bound,
            eliminated=sieve < quarter,
        ))
    all_elim = all(r.eliminated for r in records)
    return QuarterGenusReport(
        q=q, m=m_half, genus=curve.genus, genus_ok=genus_ok, maximal=maximal,
        branch_ok=branch_ok, scanned=tuple(records), all_eliminated=all_elim,
        ok=genus_ok and maximal and branch_ok and all_elim,
    )


# ---------------------------------------------------------------------------
# the projective embedding check for trace curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingReport:
    points_checked: int
    rational_points: int
    rational_images: int
    matches: bool
    infinity_ok: bool
    ok: bool


def embedding_check(curve: CurveModel) -> EmbeddingReport:
    """Rationality of images under (1 : y : ... : y^(n-1) : x : y^n).

    A point has a rational image exactly when all coordinate ratios lie
    in the level-2 field; the infinite place maps to (0 : ... : 0 : 1).
    """
    if curve.family != "hermitian-type":
        raise ValueError("the embedding check supports the trace family only")
    tower = curve.tower
    q = tower.q
    n = _system_n(curve)
    if n * curve.d != q + 1:
        raise ValueError("the embedding check needs n * d = q + 1")
    checked = 0
    rat_pts = 0
    rat_imgs = 0
    matches = True
    for P in curve.enumerate_points(4):
        if P.is_infinity:
            continue
        coords = [tower.pow(P.y, j) for j in range(n)] + [P.x, tower.pow(P.y, n)]
        img_rational = all(tower.in_level(v, 2) for v in coords if v)
        point_rational = curve.is_rational(P)
        checked += 1
        rat_pts += point_rational
        rat_imgs += img_rational
        if img_rational != point_rational:
            matches = False
    infinity_ok = curve.is_rational(INFINITY)
    return EmbeddingReport(
        points_checked=checked,
        rational_points=rat_pts,
        rational_images=rat_imgs,
        matches=matches,
        infinity_ok=infinity_ok,
        ok=matches and infinity_ok,
    )


# ---------------------------------------------------------------------------
# exhaustive search for second-branch models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureHit:
    f_coeffs: tuple[int, ...]
    genus: int
    count: int
    n: int
    two_g_matches: bool
    n_m1_matches: bool


@dataclass(frozen=True)
class ConjectureReport:
    q: int
    m1: int
    d: int
    tested: int
    skipped_equivalent: int
    hits: tuple[ConjectureHit, ...]
    complete: bool
    budget: int
    spent: int


def conjecture_explore(tower: FieldTower, m1: int, d: int | None = None,
                       budget: int = 1 << 22) -> ConjectureReport:
    """Grid-search monic additive models of degree m1 for maximality.

    Candidates equivalent under rescaling x by a d-th power are folded
    to the lex-least representative before testing. The budget counts
    one level-2 field scan per tested candidate; an exhausted budget
    yields a partial report with complete=False.
    """
    q = tower.q
    p = tower.p
    if d is None:
        d = q + 1
    e = 0
    while p ** e < m1:
        e += 1
    if p ** e != m1 or not 2 <= m1 <= q:
        raise ValueError("m1 must be a power of the characteristic with 2 <= m1 <= q")
    if math.gcd(d, p) != 1 or d < 2:
        raise ValueError("d must be at least 2 and prime to the characteristic")
    level2 = tower.elements(2)
    nonzero = [z for z in level2 if z]
    d_prime = math.gcd(d, q * q - 1)
    scalers = sorted({tower.pow(z, d_prime) for z in nonzero})
    expected = q * q + (m1 - 1) * (d - 1) * q + 1
    unit_cost = q * q
    tested = 0
    skipped = 0
    spent = 0
    complete = True
    hits = []

    def orbit_min(cand: tuple[int, ...]) -> bool:
        key = tuple(tower.coeffs(v) for v in cand)
        exps = [p ** i - m1 for i in range(e)]
        for c in scalers:
            other = tuple(
                tower.mul(v, tower.pow(c, exp)) if v else 0
                for v, exp in zip(cand, exps))
            if tuple(tower.coeffs(v) for v in other) < key:
                return False
        return True

    grids = [nonzero] + [level2] * (e - 1)

    def walk(prefix: tuple[int, ...], depth: int):
        nonlocal tested, skipped, spent, complete
        if not complete:
            return
        if depth == e:
            if not orbit_min(prefix):
                skipped += 1
                return
            if spent + unit_cost > budget:
                complete = False
                return
            spent += unit_cost
            tested += 1
            curve = define_curve(tower, prefix + (1,), d)
            if curve.count(2) == expected:
                n = _system_n(curve)
                hits.append(ConjectureHit(
                    f_coeffs=prefix + (1,),
                    genus=curve.genus,
                    count=curve.count(2),
                    n=n,
                    two_g_matches=2 * curve.genus == (m1 - 1) * q,
                    n_m1_matches=n * m1 == q,
                ))
            return
        for v in grids[depth]:
            walk(prefix + (v,), depth + 1)
            if not complete:
                return

    walk((), 0)
    return ConjectureReport(
        q=q, m1=m1, d=d, tested=tested, skipped_equivalent=skipped,
        hits=tuple(hits), complete=complete, budget=budget, spent=spent,
    )
