"""Command line front end.

Every subcommand prints one JSON document to stdout with sorted keys,
so identical invocations produce byte-identical output. Exit codes:
0 all requested identities hold, 1 an identity check failed,
2 invalid input or an infeasible computation, 3 a work budget was
exhausted (conjecture scans still print their partial report).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .agcode import build_code, export_matrix, min_distance_exact
from .curve_model import define_curve, hermitian_curve, points_to_csv
from .field_tower import (
    DEFAULT_AMBIENT_BUDGET,
    BudgetError,
    FieldTower,
    PrecisionError,
    build_tower,
)
from .verdicts import (
    BRANCH_NONE,
    bounds_report,
    conjecture_explore,
    dichotomy_check,
    embedding_check,
    genus_interval_classify,
    normalize_model,
)
from .weierstrass import linear_system_info, order_census, ramification_audit

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _tower_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--a", type=int, required=True, help="exponent with q = p^a")
    p.add_argument("--budget", type=int, default=DEFAULT_AMBIENT_BUDGET,
                   help="largest ambient field order that may be enumerated")


def _curve_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hermitian-m", type=int, default=None,
                   help="trace-family exponent m dividing q + 1")
    p.add_argument("--additive", default=None,
                   help="comma-joined additive coefficients, lowest degree first; "
                        "each is an integer code or colon-joined residues")
    p.add_argument("--d", type=int, default=None,
                   help="x-degree for --additive models")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="maxcurves",
        description="Point counts, order sequences, and codes on maximal curves.")
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("curve", help="define a curve, count points, check bounds")
    _tower_flags(c)
    _curve_flags(c)
    c.add_argument("--level", type=int, choices=(2, 4), default=2,
                   help="field level for --emit point listings")
    c.add_argument("--emit", default=None, help="write the point list as CSV")
    c.set_defaults(func=cmd_curve)

    au = sub.add_parser("audit", help="run every order-sequence identity check")
    _tower_flags(au)
    _curve_flags(au)
    au.add_argument("--sample-seed", type=int, default=0,
                    help="seed for sampled non-rational spot checks")
    au.set_defaults(func=cmd_audit)

    co = sub.add_parser("code", help="build an evaluation code")
    _tower_flags(co)
    _curve_flags(co)
    co.add_argument("--lambda", dest="lam", type=int, required=True,
                    help="pole order budget at infinity")
    co.add_argument("--exact", action="store_true",
                    help="compute the exact minimum distance")
    co.add_argument("--emit", default=None, help="write the generator matrix")
    co.add_argument("--format", choices=("csv", "json"), default="csv")
    co.set_defaults(func=cmd_code)

    cj = sub.add_parser("conjecture", help="grid-search additive models")
    _tower_flags(cj)
    cj.add_argument("--m1", type=int, required=True,
                    help="additive degree, a power of the characteristic")
    cj.add_argument("--d", type=int, default=None,
                    help="x-degree of the searched models (default q + 1)")
    cj.add_argument("--scan-budget", type=int, default=1 << 22,
                    help="total level-2 scan operations allowed")
    cj.set_defaults(func=cmd_conjecture)

    nm = sub.add_parser("normalize", help="rescale a trace-shaped model")
    _tower_flags(nm)
    nm.add_argument("--fa", required=True,
                    help="coefficient of y^q (code or colon-joined residues)")
    nm.add_argument("--fb", required=True,
                    help="coefficient of y (code or colon-joined residues)")
    nm.add_argument("--m", type=int, required=True, help="x-degree dividing q + 1")
    nm.set_defaults(func=cmd_normalize)
    return top


def _parse_element(token: str, tower: FieldTower) -> int:
    token = token.strip()
    if ":" in token:
        digits = [int(x) for x in token.split(":")]
        if len(digits) > tower.degree:
            raise ValueError(f"element has more than {tower.degree} residues")
        return tower.element(digits)
    code = int(token)
    if not 0 <= code < tower.order:
        raise ValueError(f"element code {code} is out of range")
    return code


def _curve_from(args, tower: FieldTower):
    picked_h = args.hermitian_m is not None
    picked_a = args.additive is not None
    if picked_h == picked_a:
        raise ValueError("choose exactly one of --hermitian-m or --additive")
    if picked_h:
        return hermitian_curve(tower, args.hermitian_m)
    if args.d is None:
        raise ValueError("--additive requires --d")
    coeffs = tuple(_parse_element(tok, tower) for tok in args.additive.split(","))
    return define_curve(tower, coeffs, args.d)


def _digit_list(tower: FieldTower, code: int) -> list[int]:
    return list(tower.coeffs(code))


def _norm_json(tower: FieldTower, norm) -> dict | None:
    if norm is None:
        return None
    return {
        "power_index": norm.power_index,
        "y_scale": _digit_list(tower, norm.y_scale),
        "x_scale": _digit_list(tower, norm.x_scale),
        "verified": norm.verified,
    }


def _interval_json(cls) -> dict:
    return {
        "q": cls.q,
        "genus": cls.genus,
        "t": cls.t,
        "upper_bound": str(cls.upper_bound),
        "next_upper": str(cls.next_upper),
        "attains_upper": cls.attains_upper,
        "n": cls.n,
        "consistent": cls.consistent,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_curve(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.a, budget=args.budget)
    curve = _curve_from(args, tower)
    counts: dict = {
        "rational": curve.count(2),
        "expected_maximal": asdict(curve.maximality_report())["expected"],
        "maximal": curve.is_maximal,
    }
    try:
        counts["quartic"] = curve.count(4)
    except BudgetError:
        counts["quartic"] = None
    if curve.is_maximal:
        counts["quartic_predicted"] = curve.predicted_count(2)
        if counts["quartic"] is not None:
            counts["quartic_matches_prediction"] = \
                counts["quartic"] == counts["quartic_predicted"]
    if args.emit:
        points_to_csv(curve, curve.enumerate_points(args.level), args.emit)
    out = {
        "tower": tower.report(),
        "curve": curve.report(),
        "counts": counts,
        "bounds": asdict(bounds_report(curve)),
    }
    return out, EXIT_OK


def cmd_audit(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.a, budget=args.budget)
    curve = _curve_from(args, tower)
    info = linear_system_info(curve)
    out = {
        "tower": tower.report(),
        "curve": curve.report(),
        "linear_system": asdict(info),
    }
    try:
        ram = ramification_audit(curve, sample_seed=args.sample_seed)
        out["ramification"] = asdict(ram)
        ram_ok = ram.all_ok
    except ValueError as exc:
        out["ramification"] = {"skipped": str(exc)}
        ram_ok = True
    census = order_census(curve)
    out["order_census"] = asdict(census)
    try:
        emb = embedding_check(curve)
        out["embedding"] = asdict(emb)
        emb_ok = emb.ok
    except ValueError as exc:
        out["embedding"] = {"skipped": str(exc)}
        emb_ok = True
    verdict = dichotomy_check(curve)
    out["dichotomy"] = {
        "q": verdict.q,
        "genus": verdict.genus,
        "n": verdict.n,
        "m1": verdict.m1,
        "product": verdict.product,
        "branch": verdict.branch,
        "genus_identity_ok": verdict.genus_identity_ok,
        "conjecture_flag": verdict.conjecture_flag,
        "normalization": _norm_json(tower, verdict.normalization),
    }
    cls = genus_interval_classify(tower.q, curve.genus, n=info.n)
    out["interval_classification"] = _interval_json(cls)
    branch_ok = (verdict.branch != BRANCH_NONE
                 and verdict.genus_identity_ok is not False
                 and (verdict.normalization is None
                      or verdict.normalization.verified))
    all_ok = (ram_ok and census.ok and emb_ok and branch_ok
              and bool(cls.consistent))
    out["all_identities"] = all_ok
    return out, EXIT_OK if all_ok else EXIT_IDENTITY


def cmd_code(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.a, budget=args.budget)
    curve = _curve_from(args, tower)
    code = build_code(curve, args.lam)
    out = {
        "tower": tower.report(),
        "curve": curve.report(),
        "code": {
            "n": code.length,
            "k": code.dimension,
            "lambda": code.lam,
            "q2": tower.q2,
            "d_designed": code.d_designed,
            "rank_verified": code.rank_verified,
            "monomials": [[i, j] for i, j in code.monomials],
        },
    }
    if args.exact:
        dist = min_distance_exact(code)
        out["distance"] = asdict(dist)
    if args.emit:
        export_matrix(code, args.emit, args.format)
    return out, EXIT_OK if code.rank_verified else EXIT_IDENTITY


def cmd_conjecture(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.a, budget=args.budget)
    rep = conjecture_explore(tower, args.m1, d=args.d, budget=args.scan_budget)
    out = {
        "tower": tower.report(),
        "scan": {
            "q": rep.q,
            "m1": rep.m1,
            "d": rep.d,
            "tested": rep.tested,
            "skipped_equivalent": rep.skipped_equivalent,
            "complete": rep.complete,
            "budget": rep.budget,
            "spent": rep.spent,
            "hits": [
                {
                    "f_coeffs": [_digit_list(tower, c) for c in hit.f_coeffs],
                    "genus": hit.genus,
                    "count": hit.count,
                    "n": hit.n,
                    "two_g_matches": hit.two_g_matches,
                    "n_m1_matches": hit.n_m1_matches,
                }
                for hit in rep.hits
            ],
        },
    }
    return out, EXIT_OK if rep.complete else EXIT_BUDGET


def cmd_normalize(args) -> tuple[dict, int]:
    tower = build_tower(args.p, args.a, budget=args.budget)
    a = _parse_element(args.fa, tower)
    b = _parse_element(args.fb, tower)
    norm = normalize_model(tower, a, b, args.m)
    out = {
        "tower": tower.report(),
        "input": {
            "a": _digit_list(tower, a),
            "b": _digit_list(tower, b),
            "m": args.m,
        },
        "normalization": _norm_json(tower, norm),
    }
    return out, EXIT_OK if norm.verified else EXIT_IDENTITY


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_VALIDATION
    try:
        out, exit_code = args.func(args)
    except BudgetError as exc:
        print(json.dumps({"error": str(exc), "kind": "budget"},
                         sort_keys=True, indent=2), file=sys.stderr)
        return EXIT_BUDGET
    except PrecisionError as exc:
        print(json.dumps({"error": str(exc), "kind": "precision"},
                         sort_keys=True, indent=2), file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"error": str(exc), "kind": "validation"},
                         sort_keys=True, indent=2), file=sys.stderr)
        return EXIT_VALIDATION
    print(json.dumps(out, sort_keys=True, indent=2))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
