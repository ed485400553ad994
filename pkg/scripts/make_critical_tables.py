#!/usr/bin/env python3
"""Regenerate the zonal critical-ratio tables and diff them against the
frozen reference values.

Writes one CSV per odd flow degree into --outdir (default: ./tables) and
prints the worst relative deviation per table.
"""

import argparse
import pathlib
import sys

from misiolek.criterion import critical_table
from misiolek.reference import REFERENCE_RATIOS, REFERENCE_TOLERANCE, REFERENCE_UNDEFINED


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degrees", type=int, nargs="+", default=[3, 5, 7],
                        help="zonal flow degrees l1 (default: 3 5 7)")
    parser.add_argument("--l2-max", type=int, default=6)
    parser.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("tables"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    status = 0
    for l1 in args.degrees:
        table = critical_table(l1, l2_max=args.l2_max)
        path = args.outdir / f"critical_ratios_l1_{l1}.csv"
        with path.open("w") as out:
            out.write("l2,m2,ratio,direction,status\n")
            for cell in table.cells:
                ratio = repr(cell.value) if cell.defined else ""
                direction = cell.direction or ""
                out.write(f"{cell.l2},{cell.m2},{ratio},{direction},{cell.status}\n")
        reference = REFERENCE_RATIOS.get(l1)
        if reference is None:
            print(f"l1={l1}: {len(table.defined_cells())} defined cells -> {path} (no reference)")
            continue
        worst = 0.0
        problems = []
        for (l2, m2), ref in reference.items():
            cell = table.cell(l2, m2)
            if not cell.defined:
                problems.append(f"({l2},{m2}) expected {ref}, got {cell.status}")
                continue
            worst = max(worst, abs(cell.value - ref) / abs(ref))
        for (l2, m2) in REFERENCE_UNDEFINED.get(l1, []):
            if table.cell(l2, m2).status != "undefined":
                problems.append(f"({l2},{m2}) should be undefined")
        verdict = "ok" if worst <= REFERENCE_TOLERANCE and not problems else "MISMATCH"
        if verdict != "ok":
            status = 1
        print(f"l1={l1}: worst relative deviation {worst:.2e} ({verdict}) -> {path}")
        for message in problems:
            print(f"  {message}")
    return status


if __name__ == "__main__":
    sys.exit(main())
