#!/usr/bin/env python3
"""Reproduce the evaluation-count comparison tables.

Writes one CSV per table into results/ (created if missing) and prints the
markdown versions to stdout, with reference counts and deltas attached.
Equivalent to four `ratiosect bench --compare-paper` invocations.
"""

from __future__ import annotations

import pathlib
import sys

from ratiosect.cli import main as cli_main

RESULTS = pathlib.Path(__file__).resolve().parent.parent / "results"

TABLES = {
    "counts_passive_c05": ["--methods", "bisect,golden,ratio-p", "--c", "0.5"],
    "counts_passive_c02": ["--methods", "ratio-p", "--c", "0.2"],
    "counts_active_c001": ["--methods", "ratio-a"],
    "counts_brent": ["--methods", "brent,brent-m"],
}


def main() -> int:
    RESULTS.mkdir(exist_ok=True)
    for name, selection in TABLES.items():
        csv_path = RESULTS / f"{name}.csv"
        rc = cli_main([
            "bench", *selection, "--functions", "1-20", "--compare-paper",
            "--out", str(csv_path),
        ])
        if rc != 0:
            return rc
        print(f"# {name}  ->  {csv_path}")
        rc = cli_main([
            "bench", *selection, "--functions", "1-20", "--compare-paper",
            "--format", "markdown",
        ])
        if rc != 0:
            return rc
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
