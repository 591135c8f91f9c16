#!/usr/bin/env python3
"""Scan the effectivity and vanishing conjectures over a parameter range.

Every open-stratum CSM class with m <= m_max, n <= min(m, n_max) is checked
for nonnegative coefficients and for vanishing at [P^0 .. P^(n-k-2)].
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from detchern.cli import scan_conjectures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("m_max", type=int, nargs="?", default=6)
    parser.add_argument("n_max", type=int, nargs="?", default=5)
    args = parser.parse_args()
    report = scan_conjectures(args.m_max, args.n_max)
    print(f"instances checked: {report.instances_checked}")
    print(f"effectivity violations: {len(report.effectivity_violations)}")
    print(f"vanishing violations: {len(report.vanishing_violations)}")
    for m, n, k, l, c in report.effectivity_violations:
        print(f"  negative coefficient {c} at [P^{l}] for ({m},{n},{k})")
    for m, n, k, l, c in report.vanishing_violations:
        print(f"  nonzero coefficient {c} at [P^{l}] for ({m},{n},{k})")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
