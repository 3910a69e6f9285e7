#!/usr/bin/env python3
"""Run the two parameter sweeps and write plot-ready CSVs into results/.

The c-sweep records the mean evaluation count of the passive ratio solver
for c = 0.01 … 0.80 (step 0.01) with its degree-5 smoothing polynomial;
the j-sweep records active-search totals for c = 10^(j/2), j = -15 … -2.
Both run over the strictly unimodal problems 7-20 by default; pass a
different selection (e.g. ``1-20``) as the only argument.
"""

from __future__ import annotations

import pathlib
import sys

from ratiosect.cli import main as cli_main

RESULTS = pathlib.Path(__file__).resolve().parent.parent / "results"


def main() -> int:
    functions = sys.argv[1] if len(sys.argv) > 1 else "7-20"
    RESULTS.mkdir(exist_ok=True)

    c_csv = RESULTS / "sweep_c.csv"
    rc = cli_main(["sweep-c", "--functions", functions, "--out", str(c_csv)])
    if rc != 0:
        return rc
    print(f"wrote {c_csv}")

    j_csv = RESULTS / "sweep_j.csv"
    rc = cli_main(["sweep-j", "--functions", functions, "--out", str(j_csv)])
    if rc != 0:
        return rc
    print(f"wrote {j_csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
