#!/usr/bin/env python3
"""Sweep the fixed/mobile decomposition of |-K| on F_n and print JSON lines.

Usage: python scripts/anticanonical_sweep.py [N_MAX]
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from nslattice import anticanonical_class, anticanonical_fixed_locus


def main() -> None:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    for n in range(n_max + 1):
        ac = anticanonical_class(n)
        dec = anticanonical_fixed_locus(n)
        print(
            json.dumps(
                {
                    "n": n,
                    "class": {"a": ac.a, "b": ac.b},
                    "j": dec.j,
                    "fixed": {"a": dec.fixed.a, "b": dec.fixed.b},
                    "mobile": {"a": dec.mobile.a, "b": dec.mobile.b},
                    "has_fixed_component": not dec.fixed.is_zero(),
                }
            )
        )


if __name__ == "__main__":
    main()
