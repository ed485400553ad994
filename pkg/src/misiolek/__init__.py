"""Exact conjugate-point criteria for ideal flow on the rotating 2-sphere.

Wigner 3j symbols and spherical structure constants in exact radical
arithmetic, the Misiolek criterion in its flat, Coriolis, zonal critical
ratio and Rossby-Haurwitz wave forms, and a quadrature oracle that
re-derives every structure constant from pointwise Poisson brackets.
"""

from .exact import BigRational, SignedSqrtRational, factorial, ssr_mul, ssr_to_float
from .structure import BracketExpansion, HarmonicIndex, StructureValue, bracket_expand, g_real, l123
from .wigner import (
    ClosedFormDomainError,
    ThreeJArgs,
    clebsch_gordan,
    threej,
    threej_closed_110,
    threej_closed_stretched,
    threej_lm,
    threej_recursive_112,
)
from .criterion import (
    CriticalRatio,
    CriticalRatioTable,
    MCReport,
    MCValue,
    RHWave,
    conjugate_time,
    critical_ratio,
    critical_table,
    mc_combination,
    mc_coriolis,
    mc_flat,
    mc_symmetry_negate,
    rhw_mc,
    rhw_threshold,
    theorem_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "BracketExpansion",
    "ClosedFormDomainError",
    "CriticalRatio",
    "CriticalRatioTable",
    "HarmonicIndex",
    "MCReport",
    "MCValue",
    "RHWave",
    "SignedSqrtRational",
    "StructureValue",
    "ThreeJArgs",
    "bracket_expand",
    "clebsch_gordan",
    "conjugate_time",
    "critical_ratio",
    "critical_table",
    "factorial",
    "g_real",
    "l123",
    "mc_combination",
    "mc_coriolis",
    "mc_flat",
    "mc_symmetry_negate",
    "rhw_mc",
    "rhw_threshold",
    "ssr_mul",
    "ssr_to_float",
    "theorem_scan",
    "threej",
    "threej_closed_110",
    "threej_closed_stretched",
    "threej_lm",
    "threej_recursive_112",
]
