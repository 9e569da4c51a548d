"""Order sequences, numerical semigroups, and the ramification audit.

Order sequences are read off as the pivot columns of the row echelon
form of the basis-expansion matrix at a point: the pivot columns are
exactly the t-adic valuations attained by the linear system there.
The audit cross-checks the divisor degrees of the system cut by
L((q+1) * P_infinity) against per-point weights over the full point
set of a maximal trace-family curve.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .curve_model import INFINITY, CurveModel, Point
from .field_tower import PrecisionError
from .function_field import (
    basis_functions,
    default_precision,
    local_expansion,
    max_precision,
    rr_basis,
)
from .linalg import row_echelon


# ---------------------------------------------------------------------------
# numerical semigroups
# ---------------------------------------------------------------------------

def semigroup_gaps(generators) -> tuple[int, ...]:
    """Gaps of the numerical semigroup generated by the given integers.

    The reachability sieve is extended until a full window of min(gens)
    consecutive values is reachable, which certifies that no gaps lie
    beyond the sieve bound.
    """
    gens = sorted({int(g) for g in generators})
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise ValueError("generators must have gcd 1")
    m = gens[0]
    if m == 1:
        return ()
    bound = (gens[0] - 1) * (gens[-1] - 1) + m
    while True:
        reach = bytearray(bound + 1)
        reach[0] = 1
        for g in gens:
            for v in range(g, bound + 1):
                if reach[v - g]:
                    reach[v] = 1
        if all(reach[bound - m + 1:]):
            return tuple(v for v in range(1, bound + 1) if not reach[v])
        bound *= 2


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...]

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        gens = tuple(sorted({int(g) for g in generators}))
        return cls(gens, semigroup_gaps(gens))

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def contains(self, v: int) -> bool:
        if v < 0:
            return False
        return v not in self.gaps if v <= max(self.gaps, default=-1) else True


def pair_genus(r: int, s: int) -> int:
    """Genus (r-1)(s-1)/2 of a two-generator semigroup, sieve-checked."""
    if r < 1 or s < 1 or math.gcd(r, s) != 1:
        raise ValueError("generators must be positive and coprime")
    g = (r - 1) * (s - 1) // 2
    if len(semigroup_gaps((r, s))) != g:
        raise RuntimeError("closed form disagrees with the sieve")
    return g


def nongaps_at_infinity(curve: CurveModel, count: int) -> tuple[int, ...]:
    """The smallest positive pole orders available at the infinite place."""
    r, d = curve.deg_f, curve.d
    out = []
    v = 1
    while len(out) < count:
        if any(j * d <= v and (v - j * d) % r == 0 for j in range(min(r, v // d + 1))):
            out.append(v)
        v += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# the Selmer-style genus bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SelmerBound:
    """Upper bound for 2g over semigroups of multiplicity m containing q, q+1.

    sieve_2g is twice the genus of the densest such semigroup
    <m, q, q+1>; the bound can never fall below it. s is allowed to
    reach m itself, with s_at_m recording when it does.
    """

    m: int
    q: int
    bound: int
    s: int
    t: int
    u: int
    r: int
    sieve_2g: int
    equality: bool
    s_at_m: bool


def selmer_upper_bound(m: int, q: int) -> SelmerBound:
    if m < 2 or q < 2 or m > q:
        raise ValueError("need 2 <= m <= q")
    if math.gcd(m, q) != 1:
        raise ValueError("m and q must be coprime")
    for s in range(2, m + 1):
        if (s * q - q - 1) % m == 0:
            t = (s * q - q - 1) // m
            break
    else:
        raise RuntimeError("no multiplier s found; unreachable for coprime inputs")
    if t <= 0:
        raise RuntimeError("multiplier t must be positive")
    u, r = divmod(m, s)
    bound = (m - 1) * (q - 1) - u * t * (m - s + r)
    sieve_2g = 2 * len(semigroup_gaps((m, q, q + 1)))
    if bound < sieve_2g:
        raise RuntimeError("bound fell below the attainable genus")
    return SelmerBound(
        m=m, q=q, bound=bound, s=s, t=t, u=u, r=r,
        sieve_2g=sieve_2g, equality=bound == sieve_2g, s_at_m=s == m,
    )


# ---------------------------------------------------------------------------
# order sequences of the (q+1)-system
# ---------------------------------------------------------------------------

RAMIFIED = "ramified-rational"
UNRAMIFIED = "unramified-rational"
NON_RATIONAL = "non-rational"


@dataclass(frozen=True)
class OrderSequence:
    point: Point
    orders: tuple[int, ...]
    point_type: str


def _point_type(curve: CurveModel, P: Point) -> str:
    if P.is_infinity:
        return RAMIFIED if curve.d > 1 else UNRAMIFIED
    if not curve.is_rational(P):
        return NON_RATIONAL
    if curve.d > 1 and P.x == 0:
        return RAMIFIED
    return UNRAMIFIED


def order_sequence(curve: CurveModel, P: Point) -> OrderSequence:
    """Valuations attained at P by the system cut out by L((q+1)P_inf)."""
    q = curve.tower.q
    basis = rr_basis(curve, q + 1)
    if P.is_infinity:
        orders = tuple(sorted(q + 1 - w for w in basis.pole_orders))
        return OrderSequence(P, orders, _point_type(curve, P))
    funcs = basis_functions(curve, q + 1)
    prec = default_precision(curve)
    cap = max_precision(curve)
    while True:
        rows = [list(local_expansion(P, f, prec).coeffs) for f in funcs]
        _, pivots = row_echelon(curve.tower, rows)
        if len(pivots) == basis.dimension:
            return OrderSequence(P, tuple(pivots), _point_type(curve, P))
        if prec >= cap:
            raise PrecisionError(
                f"order sequence unresolved at precision cap {cap}")
        prec = min(2 * prec, cap)


# ---------------------------------------------------------------------------
# divisor degrees of the system and the full audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearSystemInfo:
    dimension: int
    n: int
    epsilon_orders: tuple[int, ...]
    frobenius_orders: tuple[int, ...]
    ramification_degree: int
    frobenius_divisor_degree: int


def linear_system_info(curve: CurveModel) -> LinearSystemInfo:
    if not curve.is_maximal:
        raise ValueError("linear-system analysis requires a maximal curve")
    q = curve.tower.q
    dim = rr_basis(curve, q + 1).dimension
    n = dim - 2
    if n < 1:
        raise ValueError("the system must have projective dimension at least 2")
    g = curve.genus
    eps = tuple(range(n + 1)) + (q,)
    nus = tuple(range(n)) + (q,)
    deg_r = sum(eps[1:]) * (2 * g - 2) + dim * (q + 1)
    deg_s = sum(nus[1:]) * (2 * g - 2) + (q * q + n + 1) * (q + 1)
    return LinearSystemInfo(
        dimension=dim,
        n=n,
        epsilon_orders=eps,
        frobenius_orders=nus,
        ramification_degree=deg_r,
        frobenius_divisor_degree=deg_s,
    )


@dataclass(frozen=True)
class RamificationReport:
    """Identity-by-identity audit of the (q+1)-system on a trace curve.

    Points with x = 0 together with the infinite place form the ramified
    locus of the degree-d covering; every identity below ties their
    order-sequence weights to the global divisor degrees.
    """

    ramified_count: int
    unramified_rational_count: int
    euler_identity_ok: bool
    weight_ramified: int
    weight_unramified: int
    weight_sum_ok: bool
    ramified_orders_ok: bool
    unramified_orders_ok: bool
    frobenius_sum_ok: bool
    nonrational_generic_ok: bool
    nonrational_checked: int
    nonrational_sampled: bool
    fiber_census_ok: bool
    all_ok: bool


def ramification_audit(curve: CurveModel, *, sample_seed: int = 0,
                       sample_size: int = 40) -> RamificationReport:
    info = linear_system_info(curve)
    if curve.family != "hermitian-type":
        raise ValueError("the ramification audit supports the trace family only")
    if info.n < 2:
        raise ValueError("the audit needs projective dimension at least 3")
    tower = curve.tower
    q = tower.q
    n = info.n
    m = curve.d
    g = curve.genus

    rational = list(curve.enumerate_points(2))
    ramified = [P for P in rational if P.is_infinity or P.x == 0]
    t1 = len(ramified)
    t2 = len(rational) - t1
    t1_ok = t1 == q + 1 and all(curve.is_rational(P) for P in ramified)
    euler_ok = 2 * g - 2 == -2 * m + (m - 1) * t1

    w1_num = n * ((n - 1) * m - n - 1)
    if w1_num % 2:
        raise RuntimeError("ramified weight is not an integer")
    w1 = w1_num // 2 + 2
    w2 = 1
    weight_sum_ok = w1 * t1 + w2 * t2 == info.ramification_degree

    eps = info.epsilon_orders
    nus = info.frobenius_orders
    expected_ram = order_sequence(curve, INFINITY).orders
    expected_unram = tuple(range(n + 1)) + (q + 1,)
    expected_generic = tuple(range(n + 1)) + (q,)

    ram_ok = True
    unram_ok = True
    frob_sum = 0
    for P in rational:
        seq = order_sequence(curve, P)
        jw = sum(a - b for a, b in zip(seq.orders, eps))
        frob_sum += sum(seq.orders[i + 1] - nus[i] for i in range(n + 1))
        if P in ramified:
            if seq.orders != expected_ram or jw != w1:
                ram_ok = False
        else:
            if seq.orders != expected_unram or jw != w2:
                unram_ok = False
    frob_ok = frob_sum == info.frobenius_divisor_degree

    nonrational = [P for P in curve.enumerate_points(4)
                   if not curve.is_rational(P)]
    sampled = q > 5
    if sampled:
        rng = random.Random(sample_seed)
        nonrational = rng.sample(nonrational, min(sample_size, len(nonrational)))
    generic_ok = all(order_sequence(curve, P).orders == expected_generic
                     for P in nonrational)

    census_ok = _fiber_census(curve)

    all_ok = (t1_ok and euler_ok and weight_sum_ok and ram_ok and unram_ok
              and frob_ok and generic_ok and census_ok)
    return RamificationReport(
        ramified_count=t1,
        unramified_rational_count=t2,
        euler_identity_ok=t1_ok and euler_ok,
        weight_ramified=w1,
        weight_unramified=w2,
        weight_sum_ok=weight_sum_ok,
        ramified_orders_ok=ram_ok,
        unramified_orders_ok=unram_ok,
        frobenius_sum_ok=frob_ok,
        nonrational_generic_ok=generic_ok,
        nonrational_checked=len(nonrational),
        nonrational_sampled=sampled,
        fiber_census_ok=census_ok,
        all_ok=all_ok,
    )


@dataclass(frozen=True)
class OrderCensus:
    """Pointwise order-sequence facts over the full level-4 point set."""

    points: int
    j1_all_one: bool
    rational_top_ok: bool
    nonrational_top_ok: bool
    weierstrass_equals_rational: bool
    ok: bool


def order_census(curve: CurveModel) -> OrderCensus:
    """Check j_1 = 1 everywhere and the rational/non-rational top split.

    The top order is q+1 exactly at rational points and q elsewhere, so
    the Weierstrass locus of the system is the set of rational points.
    """
    q = curve.tower.q
    n = rr_basis(curve, q + 1).dimension - 2
    generic = tuple(range(n + 1)) + (q,)
    total = 0
    j1_ok = True
    rat_top = True
    nonrat_top = True
    wp_match = True
    for P in curve.enumerate_points(4):
        seq = order_sequence(curve, P)
        total += 1
        if seq.orders[1] != 1:
            j1_ok = False
        rational = curve.is_rational(P)
        if rational and seq.orders[-1] != q + 1:
            rat_top = False
        if not rational and seq.orders[-1] != q:
            nonrat_top = False
        if (seq.orders != generic) != rational:
            wp_match = False
    ok = j1_ok and rat_top and nonrat_top and wp_match
    return OrderCensus(
        points=total,
        j1_all_one=j1_ok,
        rational_top_ok=rat_top,
        nonrational_top_ok=nonrat_top,
        weierstrass_equals_rational=wp_match,
        ok=ok,
    )


def _fiber_census(curve: CurveModel) -> bool:
    """Every nonzero value of F on k is a d-th power with d rational roots."""
    tower = curve.tower
    q = tower.q
    level2 = tower.elements(2)
    root_count: dict[int, int] = {}
    for x in level2:
        if x:
            v = tower.pow(x, curve.d)
            root_count[v] = root_count.get(v, 0) + 1
    zero_fibers = 0
    for y0 in level2:
        v = curve.f_eval(y0)
        if v == 0:
            zero_fibers += 1
        elif root_count.get(v, 0) != curve.d:
            return False
    return zero_fibers == q
