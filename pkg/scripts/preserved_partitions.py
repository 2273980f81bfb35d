#!/usr/bin/env python3
"""For each cycle type of the symmetric group S_n, find a preserved partition.

Takes one representative permutation per cycle type and reports the
nontrivial partition it preserves as a unit, or "none" (exactly the full
cycles of prime length).

Usage:
    python scripts/preserved_partitions.py --n 7
"""

import argparse
import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from partmaps.core import Transformation, format_partition
from partmaps.cycles import decompose, find_preserved_partition
from partmaps.membership import in_units


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6, help="ground-set size (at least 3)")
    args = parser.parse_args()
    if args.n < 3:
        parser.error("--n must be at least 3")

    representatives = {}
    for images in itertools.permutations(range(args.n)):
        f = Transformation(images)
        cycle_type = tuple(sorted(decompose(f).lengths, reverse=True))
        representatives.setdefault(cycle_type, f)

    print(f"{'cycle type':<18} {'representative':<22} preserved partition")
    print("-" * 70)
    for cycle_type in sorted(representatives, reverse=True):
        f = representatives[cycle_type]
        found = find_preserved_partition(f)
        if found is None:
            shown = "none"
        else:
            assert in_units(f, found)
            shown = format_partition(found)
        type_str = "+".join(map(str, cycle_type))
        print(f"{type_str:<18} {str(f):<22} {shown}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
