#!/usr/bin/env python3
"""Recompute every bundled reference table and report per-cell equality."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from detchern.cli import reproduce_reference_tables


def main() -> int:
    report = reproduce_reference_tables()
    print(f"cells checked: {report.cells_checked}")
    if report.ok:
        print("all cells match")
        return 0
    for kind, key, idx, expected, actual in report.mismatches:
        print(f"FAIL {kind}{key} at {idx}: expected {expected}, got {actual}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
