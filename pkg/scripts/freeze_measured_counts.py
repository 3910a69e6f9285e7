#!/usr/bin/env python3
"""Regenerate tests/data/measured_counts.csv.

Runs the seven reference solver configurations over all 20 suite problems
at the default tolerance and freezes the per-cell evaluation counts.  The
tests compare live runs against this file bit for bit, so any change to a
solver that shifts even one count shows up as a regression diff.
"""

from __future__ import annotations

import csv
import pathlib
import sys

from ratiosect import MethodSpec, run_benchmark

CONFIGS = [
    MethodSpec("bisect"),
    MethodSpec("golden"),
    MethodSpec("ratio-p", 0.5),
    MethodSpec("ratio-p", 0.2),
    MethodSpec("ratio-a", 0.001),
    MethodSpec("brent"),
    MethodSpec("brent-m", 0.2),
]


def main() -> int:
    out_path = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "measured_counts.csv"
    report = run_benchmark(CONFIGS, range(1, 21))
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["config", "function_id", "evaluations", "classification", "status"])
        for row in report.rows:
            writer.writerow([
                row.method, row.fid, row.evaluations, row.classification, row.status,
            ])
    print(f"wrote {out_path} ({len(report.rows)} rows)")
    for label, total in report.totals.items():
        print(f"  {label:16s} total {total}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
