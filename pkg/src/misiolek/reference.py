"""Frozen reference values for the zonal critical-ratio tables.

Published to four significant figures, so comparisons use a relative
tolerance of 5e-3.  Keys are (l2, m2); direction ">" means rotation rates
above the ratio produce conjugate points, "<" rates below.  Cells listed
as undefined have a vanishing structure constant in the denominator.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

REFERENCE_TOLERANCE = 5e-3

#: Critical ratios for the zonal flows of degree 3, 5 and 7.
REFERENCE_RATIOS: Dict[int, Dict[Tuple[int, int], float]] = {
    3: {
        (2, 1): 2.983, (2, 2): -19.39,
        (3, 1): 12.20, (3, 2): 30.53, (3, 3): -20.35,
        (4, 1): 41.51, (4, 2): 43.87, (4, 3): 73.68, (4, 4): -24.43,
        (5, 1): 80.5, (5, 2): 77.62, (5, 3): 78.54, (5, 4): 192.4, (5, 5): -31.31,
    },
    5: {
        (3, 1): 19.41, (3, 2): -71.19, (3, 3): 170.4,
        (4, 1): 45.64, (4, 2): 269.0, (4, 3): -60.40, (4, 4): 125.4,
        (5, 1): 101.6, (5, 2): 226.5, (5, 3): -616.9, (5, 4): -72.31, (5, 5): 123.5,
    },
    7: {
        (4, 1): 71.66, (4, 2): -205.5, (4, 3): 276.7, (4, 4): -1279.0,
        (5, 1): 127.8, (5, 2): 4792.0, (5, 3): -171.4, (5, 4): 182.1, (5, 5): -713.5,
        (6, 1): 234.1, (6, 2): 881.2, (6, 3): -475.7, (6, 4): -245.1, (6, 5): 175.2,
        (6, 6): -569.9,
    },
}

#: Cells the reference prints as 0: the denominator vanishes by the triangle
#: bound, so they are undefined rather than numerically zero.
REFERENCE_UNDEFINED: Dict[int, List[Tuple[int, int]]] = {
    3: [],
    5: [(2, 1), (2, 2)],
    7: [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)],
}
