"""Invariant suites shared by the command-line `verify` entry and the tests.

Each suite sweeps one family of exact identities (or oracle comparisons) up
to a degree cap and reports check/failure counts; exact identities tolerate
nothing, oracle-backed ones report their worst deviation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .criterion import critical_table, mc_coriolis, theorem_scan
from .oracle import QuadratureGrid, oracle_structure_coeff
from .reference import REFERENCE_RATIOS, REFERENCE_TOLERANCE, REFERENCE_UNDEFINED
from .structure import HarmonicIndex, bracket_expand, g_real, validate_symmetries
from .wigner import (
    ClosedFormDomainError,
    threej_closed_110,
    threej_closed_stretched,
    threej_lm,
    threej_recursive_112,
)

SUITE_NAMES = ("wigner", "structure", "oracle", "theorem", "table")


@dataclass
class SuiteResult:
    suite: str
    l_max: int
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    max_deviation: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> dict:
        out = {
            "suite": self.suite,
            "lmax": self.l_max,
            "checks": self.checks,
            "failures": len(self.failures),
        }
        if self.max_deviation is not None:
            out["max_deviation"] = self.max_deviation
        if self.failures:
            out["first_failure"] = self.failures[0]
        return out


def wigner_suite(l_max: int = 12) -> SuiteResult:
    """Closed forms against the Racah path, symmetries, and orthogonality."""
    res = SuiteResult("wigner", l_max)
    for l1 in range(l_max + 1):
        for m in range(l_max + 1):
            for l3 in range(abs(l1 - m), min(l1 + m, l_max) + 1):
                for m1 in range(-l1, l1 + 1):
                    if abs(m - m1) > l3:
                        continue
                    res.checks += 1
                    if threej_closed_stretched(l1, m, l3, m1) != threej_lm(l1, m, l3, m1, -m, m - m1):
                        res.fail(f"stretched closed form off at ({l1},{m},{l3},{m1})")
    for l1 in range(1, l_max + 1):
        for l2 in range(1, l_max + 1):
            for l3 in range(abs(l1 - l2), min(l1 + l2, l_max) + 1):
                if (l1 + l2 + l3) % 2 == 0:
                    continue
                res.checks += 2
                if threej_closed_110(l1, l2, l3) != threej_lm(l1, l2, l3, 1, -1, 0):
                    res.fail(f"(1 -1 0) closed form off at ({l1},{l2},{l3})")
                try:
                    recursive = threej_recursive_112(l1, l2, l3)
                except ClosedFormDomainError:
                    continue
                if recursive != threej_lm(l1, l2, l3, 1, 1, -2):
                    res.fail(f"(1 1 -2) recursion off at ({l1},{l2},{l3})")
    for l1 in range(l_max + 1):
        for l2 in range(l_max + 1):
            for l3 in range(abs(l1 - l2), min(l1 + l2, l_max) + 1):
                sign = 1 if (l1 + l2 + l3) % 2 == 0 else -1
                for m1 in range(-l1, l1 + 1):
                    for m2 in range(-l2, l2 + 1):
                        m3 = -(m1 + m2)
                        if abs(m3) > l3:
                            continue
                        base = threej_lm(l1, l2, l3, m1, m2, m3)
                        res.checks += 2
                        swapped = threej_lm(l2, l1, l3, m2, m1, m3)
                        if swapped != base.scale(sign):
                            res.fail(f"column swap off at ({l1},{l2},{l3},{m1},{m2})")
                        negated = threej_lm(l1, l2, l3, -m1, -m2, -m3)
                        if negated != base.scale(sign):
                            res.fail(f"order negation off at ({l1},{l2},{l3},{m1},{m2})")
    for l3 in range(min(l_max, 8) + 1):
        for m3 in range(-l3, l3 + 1):
            for l1 in range(min(l_max, 8) + 1):
                for l2 in range(abs(l1 - l3), min(l1 + l3, 8) + 1):
                    total = Fraction(0)
                    for m1 in range(-l1, l1 + 1):
                        m2 = -m1 - m3
                        if abs(m2) > l2:
                            continue
                        total += threej_lm(l1, l2, l3, m1, m2, m3).square()
                    res.checks += 1
                    if total * (2 * l3 + 1) != 1:
                        res.fail(f"orthogonality off at ({l1},{l2},{l3},{m3})")
    return res


def structure_suite(l_max: int = 10) -> SuiteResult:
    """Structure-constant identities, selection-rule zeros, antisymmetry."""
    res = SuiteResult("structure", l_max)
    symmetry = validate_symmetries(l_max)
    res.checks += symmetry.checks
    for failure in symmetry.failures:
        res.fail(f"{failure.identity} identity off at {failure.indices}")
    for l1 in range(1, l_max + 1):
        for l2 in range(1, l_max + 1):
            for l3 in range(l_max + 1):
                inside = abs(l1 - l2) + 1 <= l3 <= l1 + l2 - 1
                parity_even = (l1 + l2 + l3) % 2 == 0
                if inside and not parity_even:
                    continue
                for m1 in (-1, 0, 1):
                    for m2 in (-1, 0, 1):
                        m3 = -(m1 + m2)
                        if abs(m1) > l1 or abs(m2) > l2 or abs(m3) > l3:
                            continue
                        res.checks += 1
                        if not g_real(l1, m1, l2, m2, l3, m3).is_zero():
                            reason = "parity" if parity_even else "triangle"
                            res.fail(f"{reason} zero violated at ({l1},{m1},{l2},{m2},{l3},{m3})")
    cap = min(l_max, 6)
    for l1 in range(1, cap + 1):
        for m1 in range(-l1, l1 + 1):
            for l2 in range(1, cap + 1):
                for m2 in range(-l2, l2 + 1):
                    left = bracket_expand(HarmonicIndex(l1, m1), HarmonicIndex(l2, m2))
                    right = bracket_expand(HarmonicIndex(l2, m2), HarmonicIndex(l1, m1))
                    res.checks += 1
                    if left.degrees() != right.degrees():
                        res.fail(f"bracket antisymmetry degrees off at ({l1},{m1},{l2},{m2})")
                        continue
                    for t in left:
                        if right.term(t.l3).g.root != (-t.g).root:
                            res.fail(f"bracket antisymmetry off at ({l1},{m1},{l2},{m2},{t.l3})")
    return res


def oracle_suite(l_max: int = 6, tolerance: float = 1e-9) -> SuiteResult:
    """Quadrature projections against the exact pipeline, plus grid identities."""
    res = SuiteResult("oracle", l_max)
    grid = QuadratureGrid.for_degree(l_max)
    indices = [HarmonicIndex(l, m) for l in range(l_max + 1) for m in range(-l, l + 1)]
    worst = 0.0
    for a in indices:
        for b in indices:
            plain = grid.pair_plain(grid.harmonic(a), grid.harmonic(b))
            want_plain = (-1.0) ** a.m if (a.l == b.l and a.m == -b.m) else 0.0
            conj = grid.pair_conjugated(grid.harmonic(a), grid.harmonic(b))
            want_conj = 1.0 if a == b else 0.0
            res.checks += 2
            dev = max(abs(plain - want_plain), abs(conj - want_conj))
            worst = max(worst, dev)
            if dev > 1e-12:
                res.fail(f"pairing identity off at {a}, {b}: dev {dev:.2e}")
    for a in indices:
        if a.l == 0:
            continue
        for b in indices:
            if b.l == 0:
                continue
            expansion = bracket_expand(a, b)
            m3 = a.m + b.m
            for l3 in range(l_max + 1):
                if abs(m3) > l3:
                    continue
                res.checks += 1
                got = oracle_structure_coeff(a.l, a.m, b.l, b.m, l3, m3, grid)
                dev = abs(got - expansion.coefficient(l3))
                worst = max(worst, dev)
                if dev > tolerance:
                    res.fail(f"structure coefficient off at ({a},{b},l3={l3}): dev {dev:.2e}")
    res.max_deviation = worst
    return res


def theorem_suite(l_max: int = 12) -> SuiteResult:
    """Exact positivity sweep of the criterion theorem."""
    res = SuiteResult("theorem", l_max)
    scan = theorem_scan(l_max)
    res.checks = scan.checked_pairs + scan.checked_wave_pairs + scan.checked_zonal + scan.checked_chains
    res.failures.extend(scan.failures)
    return res


def table_suite() -> SuiteResult:
    """Critical-ratio tables against the frozen reference values."""
    res = SuiteResult("table", 7)
    worst = 0.0
    for l1, expected in REFERENCE_RATIOS.items():
        table = critical_table(l1, l2_max=6)
        for (l2, m2), ref in expected.items():
            cell = table.cell(l2, m2)
            res.checks += 1
            if not cell.defined:
                res.fail(f"l1={l1} cell ({l2},{m2}) unexpectedly {cell.status}")
                continue
            rel = abs(cell.value - ref) / abs(ref)
            worst = max(worst, rel)
            if rel > REFERENCE_TOLERANCE:
                res.fail(f"l1={l1} cell ({l2},{m2}) off: {cell.value:.6g} vs {ref}")
            if (cell.direction == ">") != (ref > 0):
                res.fail(f"l1={l1} cell ({l2},{m2}) direction {cell.direction} vs sign of {ref}")
            # Scaling the ratio by (1 +- eps) moves the rate into/out of the
            # conjugate-point region whichever the inequality direction, since
            # MC_hat(ratio*(1 +- eps)) = -+ MC*eps and the zonal MC is <= 0.
            inside = mc_coriolis(HarmonicIndex(l1, 0), HarmonicIndex(l2, m2), cell.value * (1 + 1e-6))
            outside = mc_coriolis(HarmonicIndex(l1, 0), HarmonicIndex(l2, m2), cell.value * (1 - 1e-6))
            res.checks += 1
            if not (inside.value_float > 0 > outside.value_float):
                res.fail(f"l1={l1} cell ({l2},{m2}) boundary sign pattern wrong")
        for (l2, m2) in REFERENCE_UNDEFINED[l1]:
            res.checks += 1
            if critical_table(l1, l2_max=6).cell(l2, m2).status != "undefined":
                res.fail(f"l1={l1} cell ({l2},{m2}) should be undefined")
    res.max_deviation = worst
    return res


def run_suite(name: str, l_max: Optional[int] = None) -> SuiteResult:
    if name == "wigner":
        return wigner_suite(l_max if l_max is not None else 12)
    if name == "structure":
        return structure_suite(l_max if l_max is not None else 10)
    if name == "oracle":
        return oracle_suite(l_max if l_max is not None else 6)
    if name == "theorem":
        return theorem_suite(l_max if l_max is not None else 12)
    if name == "table":
        return table_suite()
    raise ValueError(f"unknown suite {name!r}")
