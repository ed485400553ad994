"""Command-line front end: symbols, brackets, criteria, tables, verification.

Every computation is a pure function of its flags; output is JSON records
one per line (or CSV for tables), with exact values serialized losslessly
as sign/rational/pi-exponent terms and floats in shortest round-trip form.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .criterion import (
    MCReport,
    MCValue,
    RHWave,
    critical_table,
    mc_coriolis,
    mc_flat,
    rhw_mc,
    rhw_threshold,
)
from .exact import SignedSqrtRational
from .structure import HarmonicIndex, bracket_expand
from .suites import SUITE_NAMES, run_suite
from .wigner import threej_lm


def _fraction_str(value: Fraction) -> str:
    return f"{abs(value.numerator)}/{value.denominator}"


def _ssr_json(value: SignedSqrtRational, pi_exp: float = 0) -> dict:
    return {"sign": value.sign, "radicand": _fraction_str(value.radicand), "pi_exp": pi_exp}


def _mc_value_json(value: MCValue) -> List[dict]:
    terms = []
    if value.rational:
        terms.append({"sign": 1 if value.rational > 0 else -1,
                      "rational": _fraction_str(value.rational), "pi_exp": 0})
    if value.over_pi:
        terms.append({"sign": 1 if value.over_pi > 0 else -1,
                      "rational": _fraction_str(value.over_pi), "pi_exp": -1})
    if not value.root_over_sqrt_pi.is_zero():
        terms.append(_ssr_json(value.root_over_sqrt_pi, pi_exp=-0.5))
    return terms


def _mc_record(request: dict, report: MCReport, verbose: bool) -> dict:
    record = {
        "request": request,
        "status": "ok",
        "exact": _mc_value_json(report.value),
        "float": report.value_float,
    }
    if verbose:
        record["summands"] = [
            {"l3": s.l3, "g_squared": _fraction_str(s.g_squared_over_pi),
             "pi_exp": -1, "weight": s.weight}
            for s in report.summands
        ]
        record["delta_term"] = str(report.delta_term)
        record["coriolis_term"] = _mc_value_json(report.coriolis_term)
    return record


def _emit(record: dict, stream) -> None:
    stream.write(json.dumps(record, separators=(",", ":")) + "\n")


def _harmonic(parser: argparse.ArgumentParser, l: int, m: int, what: str) -> HarmonicIndex:
    try:
        return HarmonicIndex(l, m)
    except ValueError as exc:
        parser.error(f"invalid {what}: {exc}")
        raise  # unreachable; parser.error exits with code 2


def cmd_wigner3j(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    l1, l2, l3 = args.l
    m1, m2, m3 = args.m
    if min(l1, l2, l3) < 0:
        parser.error("degrees must be nonnegative")
    value = threej_lm(l1, l2, l3, m1, m2, m3)
    selection_ok = (
        m1 + m2 + m3 == 0
        and abs(l1 - l2) <= l3 <= l1 + l2
        and abs(m1) <= l1 and abs(m2) <= l2 and abs(m3) <= l3
    )
    record = {
        "request": {"l": [l1, l2, l3], "m": [m1, m2, m3]},
        "status": "ok" if selection_ok else "zero-by-selection-rule",
        "exact": _ssr_json(value),
        "float": value.to_float(),
    }
    _emit(record, sys.stdout)
    return 0


def cmd_bracket(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    a = _harmonic(parser, *args.a, what="--a")
    b = _harmonic(parser, *args.b, what="--b")
    expansion = bracket_expand(a, b)
    for term in expansion:
        coeff = term.coefficient()
        _emit({
            "request": {"a": [a.l, a.m], "b": [b.l, b.m]},
            "status": "ok",
            "l3": term.l3,
            "m3": term.m3,
            "phase": "-i" if term.phase_imag < 0 else "+i",
            "g": _ssr_json(term.g.root, pi_exp=-0.5),
            "coefficient": [coeff.real, coeff.imag],
        }, sys.stdout)
    if not expansion.terms:
        _emit({
            "request": {"a": [a.l, a.m], "b": [b.l, b.m]},
            "status": "zero-by-selection-rule",
            "terms": [],
        }, sys.stdout)
    return 0


def cmd_mc(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    a = _harmonic(parser, *args.a, what="--a")
    b = _harmonic(parser, *args.b, what="--b")
    if a.l < 1 or b.l < 1:
        parser.error("criterion indices need degree >= 1")
    request = {"a": [a.l, a.m], "b": [b.l, b.m]}
    if args.rotation is not None:
        request["rotation"] = args.rotation
        report = mc_coriolis(a, b, args.rotation)
    else:
        report = mc_flat(a, b)
    _emit(_mc_record(request, report, args.verbose), sys.stdout)
    return 0


def cmd_critical_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.l1 < 1:
        parser.error("--l1 must be >= 1")
    table = critical_table(args.l1, l2_max=args.l2_max)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.format == "csv":
            out.write("l2,m2,ratio,direction,status\n")
            for cell in table.cells:
                ratio = repr(cell.value) if cell.defined else ""
                direction = cell.direction if cell.defined else ""
                out.write(f"{cell.l2},{cell.m2},{ratio},{direction},{cell.status}\n")
        else:
            for cell in table.cells:
                record = {"l1": table.l1, "l2": cell.l2, "m2": cell.m2, "status": cell.status}
                if cell.defined:
                    record["ratio"] = cell.value
                    record["direction"] = cell.direction
                _emit(record, out)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    names = [args.suite] if args.suite else list(SUITE_NAMES)
    ok = True
    for name in names:
        result = run_suite(name, args.lmax)
        _emit(result.summary(), sys.stdout)
        if not result.ok:
            ok = False
            for failure in result.failures[:20]:
                sys.stderr.write(f"FAIL [{name}] {failure}\n")
    return 0 if ok else 1


def cmd_rhw(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    l1, m1 = args.wave
    wave_index = _harmonic(parser, l1, m1, what="--wave")
    if m1 == 0:
        parser.error("--wave order must be nonzero: the wave criterion "
                     "is stated for genuinely traveling waves only")
    if args.threshold is not None:
        m = args.threshold
        try:
            value = rhw_threshold(l1, m1, m, K=args.K)
        except ValueError as exc:
            parser.error(str(exc))
        _emit({
            "request": {"wave": [l1, m1], "threshold_order": m, "K": args.K},
            "status": "ok",
            "float": value,
        }, sys.stdout)
        return 0
    if args.probe is None:
        parser.error("either --probe or --threshold is required")
    probe = _harmonic(parser, *args.probe, what="--probe")
    amplitude = complex(args.A[0], args.A[1])
    rotation = -args.K * args.C
    wave = RHWave.solution(A=amplitude, C=args.C, index=wave_index, a=rotation)
    report = rhw_mc(wave, probe)
    request = {
        "wave": [l1, m1], "A": [args.A[0], args.A[1]], "C": args.C,
        "K": args.K, "rotation": rotation, "probe": [probe.l, probe.m],
    }
    _emit(_mc_record(request, report, args.verbose), sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misiolek",
        description="Exact conjugate-point criteria for ideal flow on the rotating 2-sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner3j", help="exact Wigner 3j symbol")
    p.add_argument("--l", nargs=3, type=int, required=True, metavar=("L1", "L2", "L3"))
    p.add_argument("--m", nargs=3, type=int, required=True, metavar=("M1", "M2", "M3"))
    p.set_defaults(func=cmd_wigner3j)

    p = sub.add_parser("bracket", help="Poisson bracket expansion of two harmonics")
    p.add_argument("--a", nargs=2, type=int, required=True, metavar=("L", "M"))
    p.add_argument("--b", nargs=2, type=int, required=True, metavar=("L", "M"))
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("mc", help="Misiolek criterion, flat or rotating")
    p.add_argument("--a", nargs=2, type=int, required=True, metavar=("L1", "M1"))
    p.add_argument("--b", nargs=2, type=int, required=True, metavar=("L2", "M2"))
    p.add_argument("--rotation", type=float, default=None, help="Coriolis rotation rate")
    p.add_argument("--verbose", action="store_true", help="include per-degree summands")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("critical-table", help="critical rotation-rate table for a zonal flow")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2-max", type=int, default=6, dest="l2_max")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_critical_table)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default=None)
    p.add_argument("--lmax", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rhw", help="Rossby-Haurwitz wave criterion and thresholds")
    p.add_argument("--wave", nargs=2, type=int, required=True, metavar=("L1", "M1"))
    p.add_argument("--A", nargs=2, type=float, default=(0.0, 0.0), metavar=("RE", "IM"))
    p.add_argument("--C", type=float, default=1.0, help="zonal coefficient")
    p.add_argument("--K", type=float, default=0.0, help="rotation rate is a = -K*C")
    p.add_argument("--probe", nargs=2, type=int, default=None, metavar=("L2", "M2"))
    p.add_argument("--threshold", type=int, default=None, metavar="M",
                   help="print the |A|^2/C^2 positivity threshold for probe e_{M -M}")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_rhw)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
