#!/usr/bin/env python3
"""Tabulate the member counts for every set partition of an n-point set.

For each partition the four closed-form counts are printed; with --check
each one is also recomputed by exhaustive enumeration and compared.

Usage:
    python scripts/census.py --n 5
    python scripts/census.py --n 4 --check
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from partmaps.core import format_partition, iter_partitions, profile_of
from partmaps.counting import (
    count_sigma_grouped,
    count_sigma_idempotents,
    count_t,
    count_units,
)
from partmaps.enumeration import (
    enumerate_idempotents,
    enumerate_sigma,
    enumerate_t,
    enumerate_units,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4, help="ground-set size")
    parser.add_argument(
        "--check", action="store_true", help="cross-check formulas against enumeration"
    )
    args = parser.parse_args()

    header = f"{'partition':<24} {'|T|':>10} {'|Sigma|':>10} {'|S|':>8} {'|E(Sigma)|':>10}"
    print(header)
    print("-" * len(header))
    totals = [0, 0, 0, 0]
    for p in iter_partitions(args.n):
        profile = profile_of(p)
        counts = [
            count_t(profile),
            count_sigma_grouped(profile),
            count_units(profile),
            count_sigma_idempotents(profile),
        ]
        if args.check:
            enumerated = [
                len(enumerate_t(p)),
                len(enumerate_sigma(p)),
                len(enumerate_units(p)),
                len(enumerate_idempotents(p, ambient="sigma")),
            ]
            if counts != enumerated:
                print(f"MISMATCH at {format_partition(p)}: {counts} vs {enumerated}")
                return 1
        for i, c in enumerate(counts):
            totals[i] += c
        print(
            f"{format_partition(p):<24} {counts[0]:>10} {counts[1]:>10} "
            f"{counts[2]:>8} {counts[3]:>10}"
        )
    print("-" * len(header))
    print(f"{'sum':<24} {totals[0]:>10} {totals[1]:>10} {totals[2]:>8} {totals[3]:>10}")
    if args.check:
        print("all formulas matched enumeration")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
