"""Plane models F(y) = x^d over k = F_{q^2} with F additive.

F(T) = sum a_i T^(p^i) is F_p-linear with a_0 != 0, so every affine
fiber of x is smooth and is a coset of ker F.  The family tagged
"hermitian-type" is y^q + y = x^m with m dividing q + 1; m = q + 1
gives the Hermitian curve itself.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import gcd

from .field_tower import BudgetError, FieldTower


@dataclass(frozen=True)
class Point:
    """An affine point (x, y) in ambient codes, or the place at infinity."""

    x: int | None
    y: int | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Point(inf)"
        return f"Point({self.x}, {self.y})"


INFINITY = Point(None, None)


@dataclass(frozen=True)
class MaximalityReport:
    maximal: bool
    actual: int
    expected: int


class CurveModel:
    """A curve F(y) = x^d over level 2 of a tower; immutable after construction."""

    def __init__(self, tower: FieldTower, f_coeffs: tuple[int, ...], d: int, family: str):
        self.tower = tower
        self.f_coeffs = f_coeffs
        self.d = d
        self.family = family
        self.e = len(f_coeffs) - 1
        self.deg_f = tower.p ** self.e
        self.genus = (self.deg_f - 1) * (d - 1) // 2
        self._fibers: dict[int, tuple[dict[int, int], tuple[int, ...]]] = {}
        self._points: dict[int, tuple[Point, ...]] = {}
        self._maximal: bool | None = None
        # memo pool used by the series machinery; keyed on (point, precision)
        self._series_cache: dict[Point, list[int]] = {}

    # -- defining polynomial -------------------------------------------------

    def f_eval(self, y: int) -> int:
        t = self.tower
        acc = 0
        w = y
        for c in self.f_coeffs:
            if c:
                acc = t.add(acc, t.mul(c, w))
            w = t.pow(w, t.p)
        return acc

    def on_curve(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        return self.f_eval(P.y) == self.tower.pow(P.x, self.d)

    # -- point enumeration -----------------------------------------------------

    def _fiber_table(self, level: int):
        if level not in self._fibers:
            t = self.tower
            solmap: dict[int, int] = {}
            kernel = []
            for y in t.elements(level):
                z = self.f_eval(y)
                if z not in solmap:
                    solmap[z] = y
                if z == 0:
                    kernel.append(y)
            self._fibers[level] = (solmap, tuple(kernel))
        return self._fibers[level]

    def enumerate_points(self, level: int) -> tuple[Point, ...]:
        """All points over the given level, x then y in lex order, infinity last."""
        if level not in (2, 4):
            raise ValueError("points are enumerated over levels 2 and 4")
        if level in self._points:
            return self._points[level]
        t = self.tower
        if t.level_order(level) > t.budget:
            raise BudgetError(f"level {level} enumeration exceeds budget")
        solmap, kernel = self._fiber_table(level)
        pts: list[Point] = []
        for x in t.elements(level):
            y0 = solmap.get(t.pow(x, self.d))
            if y0 is None:
                continue
            ys = sorted((t.add(y0, kap) for kap in kernel), key=t.lex_key)
            pts.extend(Point(x, y) for y in ys)
        pts.append(INFINITY)
        out = tuple(pts)
        self._points[level] = out
        return out

    def count(self, level: int) -> int:
        return len(self.enumerate_points(level))

    # -- maximality --------------------------------------------------------------

    def maximality_report(self) -> MaximalityReport:
        q = self.tower.q
        expected = q * q + 2 * self.genus * q + 1
        actual = self.count(2)
        verdict = actual == expected
        self._maximal = verdict
        return MaximalityReport(verdict, actual, expected)

    @property
    def is_maximal(self) -> bool:
        if self._maximal is None:
            self.maximality_report()
        return bool(self._maximal)

    def predicted_count(self, j: int) -> int:
        """Point count over F_{q^(2j)} forced by maximality."""
        if j < 1:
            raise ValueError("extension index j must be >= 1")
        if not self.is_maximal:
            raise ValueError("curve is not maximal; no forced counts")
        q = self.tower.q
        return q ** (2 * j) + 1 - 2 * self.genus * (-q) ** j

    # -- point structure --------------------------------------------------------

    def frobenius(self, P: Point) -> Point:
        if P.is_infinity:
            return INFINITY
        t = self.tower
        return Point(t.frobenius_k(P.x), t.frobenius_k(P.y))

    def point_level(self, P: Point) -> int:
        if P.is_infinity:
            return 1
        t = self.tower
        return max(t.subfield_level(P.x), t.subfield_level(P.y))

    def is_rational(self, P: Point) -> bool:
        """Rational means defined over the curve's base field k = F_{q^2}."""
        return self.point_level(P) <= 2

    # -- reporting ----------------------------------------------------------------

    def report(self) -> dict:
        t = self.tower
        return {
            "family": self.family,
            "p": t.p,
            "a": t.a,
            "q": t.q,
            "d": self.d,
            "f_coeffs": [list(t.coeffs(c)) for c in self.f_coeffs],
            "deg_f": self.deg_f,
            "genus": self.genus,
        }

    def __repr__(self) -> str:
        return f"CurveModel({self.family}, d={self.d}, deg_f={self.deg_f}, q={self.tower.q})"


def define_curve(tower: FieldTower, f_coeffs, d: int) -> CurveModel:
    """Build the curve F(y) = x^d from additive coefficients (a_0, ..., a_e)."""
    coeffs = tuple(int(c) for c in f_coeffs)
    if not coeffs:
        raise ValueError("additive polynomial needs at least one coefficient")
    if coeffs[-1] == 0:
        raise ValueError("leading coefficient of F is zero")
    if coeffs[0] == 0:
        raise ValueError("a_0 = 0 gives an inseparable model")
    for c in coeffs:
        if not 0 <= c < tower.order:
            raise ValueError(f"coefficient code {c} outside ambient field")
        if not tower.in_level(c, 2):
            raise ValueError(f"coefficient {c} is not in the base field k")
    if d < 1:
        raise ValueError("d must be >= 1")
    if gcd(d, tower.p) != 1:
        raise ValueError(f"d = {d} is divisible by the characteristic")
    deg_f = tower.p ** (len(coeffs) - 1)
    if gcd(d, deg_f) != 1:
        raise ValueError(f"d = {d} and deg F = {deg_f} are not coprime")
    family = "additive-general"
    if _is_trace_shape(tower, coeffs) and (tower.q + 1) % d == 0:
        family = "hermitian-type"
    return CurveModel(tower, coeffs, d, family)


def _is_trace_shape(tower: FieldTower, coeffs: tuple[int, ...]) -> bool:
    """True when F is exactly T^q + T."""
    if len(coeffs) != tower.a + 1:
        return False
    if coeffs[0] != 1 or coeffs[-1] != 1:
        return False
    return all(c == 0 for c in coeffs[1:-1])


def hermitian_curve(tower: FieldTower, m: int) -> CurveModel:
    """The curve y^q + y = x^m with m dividing q + 1."""
    if m < 1 or (tower.q + 1) % m != 0:
        raise ValueError(f"m = {m} must divide q + 1 = {tower.q + 1}")
    coeffs = (1,) + (0,) * (tower.a - 1) + (1,)
    return define_curve(tower, coeffs, m)


def points_to_csv(curve: CurveModel, points, path) -> None:
    """Write a point list as CSV rows x, y, level with colon-joined residues."""
    t = curve.tower
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "y", "level"])
        for P in points:
            if P.is_infinity:
                w.writerow(["inf", "inf", 1])
            else:
                w.writerow([
                    ":".join(str(c) for c in t.coeffs(P.x)),
                    ":".join(str(c) for c in t.coeffs(P.y)),
                    curve.point_level(P),
                ])
