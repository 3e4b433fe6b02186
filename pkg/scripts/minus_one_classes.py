#!/usr/bin/env python3
"""Count (and optionally list) negative rational classes on plane blowups.

Usage: python scripts/minus_one_classes.py [--self-int S] [--degree-bound D]
                                           [--r-max R] [--list]

With the defaults this reproduces the classical counts of exceptional classes
1, 3, 6, 10, 16, 27, 56, 240 for one through eight blown-up points.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from nslattice import blowup_p2_lattice, enumerate_negative_rational_classes


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--self-int", type=int, default=-1)
    parser.add_argument("--degree-bound", type=int, default=7)
    parser.add_argument("--r-max", type=int, default=8)
    parser.add_argument("--list", action="store_true", help="print every class")
    args = parser.parse_args()

    print(f"self-intersection {args.self_int}, degree bound {args.degree_bound}")
    for r in range(1, args.r_max + 1):
        lattice = blowup_p2_lattice(r)
        classes = enumerate_negative_rational_classes(
            lattice, args.self_int, args.degree_bound
        )
        print(f"r = {r}: {len(classes)} classes")
        if args.list:
            for cls in classes:
                print("   ", list(cls.coeffs))


if __name__ == "__main__":
    main()
