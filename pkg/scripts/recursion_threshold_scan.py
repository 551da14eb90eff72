#!/usr/bin/env python3
"""Scan stepping relations X_j * C_{(m,...,m)} for increasing m and report
the smallest m at which each relation becomes generic.

A relation counts as generic when every decomposition weight is strictly
dominant and enters with multiplicity one; the total term count then equals
C(n+1, j) + 1.  The threshold is observed, not assumed.

Example:
    python scripts/recursion_threshold_scan.py --max-rank 4 --max-m 6
"""
import argparse
import sys
from math import comb

from orbitpoly import chebyshev


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--max-m", type=int, default=6)
    args = parser.parse_args(argv)

    print(f"{'rank':>4} {'j':>3} {'expected terms':>15} {'first generic m':>16}")
    for n in range(1, args.max_rank + 1):
        for j in range(1, n + 1):
            threshold = None
            for m in range(0, args.max_m + 1):
                rel = chebyshev.recursion_relation(j, (m,) * n)
                if rel.is_generic and rel.total_terms == rel.generic_terms:
                    threshold = m
                    break
            shown = str(threshold) if threshold is not None else f"> {args.max_m}"
            print(f"{n:>4} {j:>3} {comb(n + 1, j) + 1:>15} {shown:>16}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
