#!/usr/bin/env python3
"""Recompute the oracle minimizers and rewrite the fixtures file.

Runs the dense-grid + golden-refinement oracle over all 20 suite problems
and replaces the ``minimizer`` records in
``src/ratiosect/data/reference_data.txt``, keeping every other line as it
is.  Slow (tens of millions of evaluations in pure Python) — run it only
when the oracle or a problem definition changes.
"""

from __future__ import annotations

import pathlib
import sys
import time

from ratiosect.benchsuite import reference_minimizer

DATA = (
    pathlib.Path(__file__).resolve().parent.parent
    / "src" / "ratiosect" / "data" / "reference_data.txt"
)


def main() -> int:
    lines = DATA.read_text().splitlines()
    kept = [ln for ln in lines if not ln.startswith("minimizer ")]

    records = []
    for fid in range(1, 21):
        t0 = time.perf_counter()
        x_star, f_star, plateau = reference_minimizer(fid)
        dt = time.perf_counter() - t0
        if plateau is None:
            plo = phi = "-"
        else:
            plo, phi = repr(plateau.lo), repr(plateau.hi)
        records.append(f"minimizer {fid} {x_star!r} {f_star!r} {plo} {phi}")
        print(f"id {fid:2d}: x* = {x_star!r:>25}  f* = {f_star!r:>25}  "
              f"plateau = {plo}..{phi}  ({dt:.1f}s)", file=sys.stderr)

    DATA.write_text("\n".join(kept + records) + "\n")
    print(f"wrote {len(records)} minimizer records to {DATA}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
