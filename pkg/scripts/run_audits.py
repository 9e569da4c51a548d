"""Audit every bundled instance and print one summary row each.

Exits nonzero if any identity fails, so the script doubles as a smoke
check after source changes.
"""

import sys

from maxcurves import (
    bounds_report,
    build_tower,
    define_curve,
    dichotomy_check,
    hermitian_curve,
    order_census,
    ramification_audit,
)

INSTANCES = (
    ("q2 m3", 2, 1, ("hermitian", 3)),
    ("q3 m2", 3, 1, ("hermitian", 2)),
    ("q3 m4", 3, 1, ("hermitian", 4)),
    ("q5 m2", 5, 1, ("hermitian", 2)),
    ("q5 m3", 5, 1, ("hermitian", 3)),
    ("q4 d5", 2, 2, ("additive", (1, 1), 5)),
)


def build(p, a, recipe):
    tower = build_tower(p, a)
    if recipe[0] == "hermitian":
        return hermitian_curve(tower, recipe[1])
    return define_curve(tower, recipe[1], recipe[2])


def audit_one(name, p, a, recipe):
    curve = build(p, a, recipe)
    bounds = bounds_report(curve)
    verdict = dichotomy_check(curve)
    census = order_census(curve)
    try:
        ram = ramification_audit(curve)
        ram_cell = "ok" if ram.all_ok else "FAIL"
        ram_ok = ram.all_ok
    except ValueError:
        ram_cell = "skip"
        ram_ok = True
    ok = bounds.all_ok and census.ok and ram_ok and (
        verdict.genus_identity_ok is not False)
    print(f"{name:<8} q={curve.tower.q:<2} g={curve.genus:<2} "
          f"N={curve.count(2):<3} branch={verdict.branch:<22} "
          f"bounds={'ok' if bounds.all_ok else 'FAIL':<4} "
          f"census={'ok' if census.ok else 'FAIL':<4} ram={ram_cell}")
    return ok


def main():
    results = [audit_one(*row) for row in INSTANCES]
    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} instances clean")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
