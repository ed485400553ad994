#!/usr/bin/env python3
"""Amplitude thresholds for conjugate points along traveling waves.

For each wave index (l1, m1) and probe order m, prints the minimal
|A|^2/C^2 making the criterion positive as the rotation coupling K grows
(rate a = -K*C).  The threshold hits zero at K = m(m+1) - 2, where rotation
alone stabilizes the wave.
"""

import argparse
import sys

from misiolek.criterion import rhw_threshold


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--waves", nargs="+", default=["3:2:2", "5:3:2", "5:3:3", "7:5:4"],
                        help="wave specs l1:m1:m (probe order m with 2 <= m <= m1)")
    parser.add_argument("--kmax", type=float, default=12.0)
    parser.add_argument("--steps", type=int, default=7)
    args = parser.parse_args()

    ks = [args.kmax * i / (args.steps - 1) for i in range(args.steps)]
    header = "l1 m1 m " + " ".join(f"K={k:g}" for k in ks)
    print(header)
    for spec in args.waves:
        try:
            l1, m1, m = (int(part) for part in spec.split(":"))
        except ValueError:
            print(f"bad wave spec {spec!r}, expected l1:m1:m", file=sys.stderr)
            return 2
        row = [f"{l1:2d} {m1:2d} {m:2d}"]
        for k in ks:
            threshold = rhw_threshold(l1, m1, m, K=k)
            row.append(f"{max(threshold, 0.0):.4g}")
        print(" ".join(row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
