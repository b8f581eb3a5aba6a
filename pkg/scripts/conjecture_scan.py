#!/usr/bin/env python3
"""Scan the conjectured power upper bound over a parameter grid.

For every Veronese variety in range and every admissible m, compares the
exact normalized degree ratio against ((N-m)/(N-n))^n.  Prints the tight
cells (largest ratio/bound margin), any violations verbatim, and a
summary.  Curves are expected to sit exactly on the bound; everything
else observed so far sits strictly below it.

Usage: python scripts/conjecture_scan.py --n 1..3 --d 2..5 --top 10
"""

import argparse
from fractions import Fraction

from gaussdeg.cli import parse_range
from gaussdeg.degrees import conjecture_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="1..3", help="value or inclusive range")
    parser.add_argument("--d", default="2..5", help="value or inclusive range")
    parser.add_argument("--top", type=int, default=10, help="tightest cells to print")
    args = parser.parse_args()

    report = conjecture_scan(parse_range(args.n), parse_range(args.d))

    def margin(row) -> Fraction:
        return row.ratio / row.conjecture_upper

    print(f"{len(report.rows)} cells scanned")
    print(f"\ntightest {args.top} cells (ratio / conjectured bound):")
    print(f"  {'n':>2} {'d':>2} {'N':>4} {'m':>4}  {'margin':>12}  {'ratio':>16}")
    for row in sorted(report.rows, key=margin, reverse=True)[: args.top]:
        print(
            f"  {row.n:>2} {row.d:>2} {row.N:>4} {row.m:>4}"
            f"  {str(margin(row)):>12}  {str(row.ratio):>16}"
        )

    if report.violations:
        print(f"\nVIOLATIONS ({len(report.violations)}):")
        for row in report.violations:
            print(f"  {row.to_dict()}")
    else:
        print("\nno violations")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
