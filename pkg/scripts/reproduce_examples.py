"""Classify every catalog entry and show the verdicts next to the stored expectations."""

import argparse

from isotori import report
from isotori.catalog import CATALOG
from isotori.certify import classify
from isotori.cli import compare_expected
from isotori.ratmath import format_rat

KEYS = ("alpha", "sphere_r_sq", "hmin_ambient_J.verdict", "hmin_ambient_K.verdict",
        "hmin_projected_J.verdict", "hmin_projected_K.verdict", "minimal_in_sphere")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help="catalog entries (default: all)")
    args = parser.parse_args()
    failed = 0
    for name in args.names or CATALOG:
        entry = CATALOG[name]
        flat = dict(report.flatten(report.classification_tree(classify(entry.spec))))
        problems = compare_expected(entry)
        failed += bool(problems)
        print(f"== {name}  [{'PASS' if not problems else 'FAIL'}]")
        print(f"   {entry.description}")
        print(f"   r^2 = {[format_rat(q) for q in entry.spec.r_sq]}")
        for key in KEYS:
            print(f"   {key:26s} {flat.get(key, '-')}")
        for p in problems:
            print(f"   MISMATCH {p}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
