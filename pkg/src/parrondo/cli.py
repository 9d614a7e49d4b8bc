"""Command-line interface: ``parrondo {rate,tables,simulate,zdist}``.

Exit codes: 0 success, 2 invalid input, 3 product chain outside the
supported structures. ``PARRONDO_FORMAT`` sets the default output format.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .chain import ChainStructureError
from .closed_form import z_mean, z_parity, z_pmf
from .games import PatternSyntaxError, as_rational, make_game_spec, parse_pattern, render
from .rates import mixture_rate, pattern_rate
from .search import best_gamma, best_s
from .simulator import SimConfig, simulate

EXIT_OK, EXIT_INVALID, EXIT_STRUCTURE = 0, 2, 3
TABLE_ROWS = (3, 5, 7, 9, 25, 125, 625, 3125)
RECORD_FIELDS = ("command", "params", "exact", "float", "method", "classification")


class CLIError(Exception):
    pass


def fraction_text(x: Fraction | None) -> str | None:
    if x is None:
        return None
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sig6(x: float) -> str:
    return f"{x:#.6g}"


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from exc


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(record, out)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        keys = list(record)
        writer.writerow(keys)
        writer.writerow([json.dumps(v) if isinstance(v, dict) else v for v in record.values()])
    else:
        for key, value in record.items():
            if isinstance(value, dict):
                value = ", ".join(f"{k}={v}" for k, v in value.items())
            out.write(f"{key}: {value}\n")


def _schedule_args(ns) -> tuple:
    spec = make_game_spec(ns.r, ns.rho)
    if (ns.pattern is None) == (ns.gamma is None):
        raise CLIError("give exactly one of --pattern or --gamma")
    if ns.pattern is not None:
        return spec, parse_pattern(ns.pattern), None
    if not 0 <= ns.gamma <= 1:
        raise CLIError("--gamma must lie in [0, 1]")
    return spec, None, ns.gamma


def _rate_report(spec, pattern, gamma, start):
    if pattern is not None:
        return pattern_rate(spec, pattern, start)
    return mixture_rate(spec, gamma, start)


def cmd_rate(ns, out) -> int:
    spec, pattern, gamma = _schedule_args(ns)
    report = _rate_report(spec, pattern, gamma, ns.start % spec.r)
    params = {"r": spec.r, "rho": fraction_text(spec.rho), "start": ns.start}
    if pattern is not None:
        params["pattern"] = render(pattern)
    else:
        params["gamma"] = fraction_text(gamma)
    record = {
        "command": "rate",
        "params": params,
        "exact": fraction_text(report.rate) if report.exact else None,
        "float": float(report.rate),
        "method": "engine" if report.exact else "engine-float",
        "classification": report.classification.case_label,
    }
    _emit(record, ns.format, out)
    return EXIT_OK


def cmd_simulate(ns, out) -> int:
    spec, pattern, gamma = _schedule_args(ns)
    if ns.steps < 1:
        raise CLIError("--steps must be >= 1")
    start_state = ns.start % spec.r
    report = _rate_report(spec, pattern, gamma, start_state)
    trace_every = ns.trace_every if ns.trace else 0
    result = simulate(SimConfig(
        spec=spec,
        schedule=pattern if pattern is not None else gamma,
        initial_capital=ns.start,
        steps=ns.steps,
        seed=ns.seed,
        trace_every=trace_every,
    ))
    if ns.trace:
        result.write_trace(ns.trace)
    params = {"r": spec.r, "rho": fraction_text(spec.rho), "start": ns.start,
              "steps": ns.steps, "seed": ns.seed}
    if pattern is not None:
        params["pattern"] = render(pattern)
    else:
        params["gamma"] = fraction_text(gamma)
    exact_float = float(report.rate)
    record = {
        "command": "simulate",
        "params": params,
        "exact": fraction_text(report.rate) if report.exact else None,
        "float": exact_float,
        "method": "simulation",
        "classification": report.classification.case_label,
        "empirical": result.mean_profit_per_game,
        "difference": result.mean_profit_per_game - exact_float,
        "final_capital": result.final_capital,
    }
    _emit(record, ns.format, out)
    return EXIT_OK


def cmd_tables(ns, out) -> int:
    rows = ns.rows or list(TABLE_ROWS)
    writer = csv.writer(out)
    if ns.table == 1:
        writer.writerow(["r", "s", "rate"])
        for r in rows:
            if r < 3 or r % 2 == 0:
                raise CLIError(f"table rows need odd r >= 3, got {r}")
            s, rate = best_s(r)
            writer.writerow([r, s, sig6(float(rate))])
    elif ns.table == 2:
        writer.writerow(["r", "gamma", "rate"])
        for r in rows:
            if r < 3 or r % 2 == 0:
                raise CLIError(f"table rows need odd r >= 3, got {r}")
            opt = best_gamma(r)
            writer.writerow([r, sig6(opt.gamma), sig6(opt.rate)])
    else:
        raise CLIError(f"unknown table {ns.table}; choose 1 or 2")
    return EXIT_OK


def cmd_zdist(ns, out) -> int:
    try:
        dist = z_pmf(ns.n, ns.p)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    parity = z_parity(ns.n, ns.p)
    mean = z_mean(ns.n, ns.p)
    if ns.format == "json":
        record = {
            "command": "zdist",
            "params": {"n": ns.n, "p": fraction_text(dist.p)},
            "pmf": {str(k): fraction_text(v) for k, v in dist.pmf.items()},
            "p_even": fraction_text(parity),
            "mean": fraction_text(mean),
            "method": "closed-form",
        }
        json.dump(record, out)
        out.write("\n")
    else:
        writer = csv.writer(out)
        writer.writerow(["quantity", "k", "exact", "float"])
        for k, v in dist.pmf.items():
            writer.writerow(["pmf", k, fraction_text(v), repr(float(v))])
        writer.writerow(["p_even", "", fraction_text(parity), repr(float(parity))])
        writer.writerow(["mean", "", fraction_text(mean), repr(float(mean))])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get("PARRONDO_FORMAT", "text")
    if default_fmt not in ("json", "csv", "text"):
        default_fmt = "text"
    parser = argparse.ArgumentParser(prog="parrondo", description="Rates of profit for Parrondo game sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def schedule_flags(p):
        p.add_argument("--r", type=int, required=True, help="modulus of game B (>= 3)")
        p.add_argument("--rho", type=_rational, required=True, help="fairness parameter in [0,1], a/b or decimal")
        p.add_argument("--pattern", help="pattern such as ABB or '(AB)^2B'")
        p.add_argument("--gamma", type=_rational, help="probability of playing A in a random mixture")
        p.add_argument("--start", type=int, default=0, help="initial capital (default 0)")

    p = sub.add_parser("rate", help="exact rate of profit")
    schedule_flags(p)
    p.add_argument("--format", choices=("json", "csv", "text"), default=default_fmt)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("simulate", help="Monte Carlo rate next to the exact rate")
    schedule_flags(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trace", help="write a step,S_n CSV trace to this path")
    p.add_argument("--trace-every", type=int, default=1000, help="trace sampling interval")
    p.add_argument("--format", choices=("json", "csv", "text"), default=default_fmt)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tables", help="reproduce the best-s and best-gamma tables as CSV")
    p.add_argument("--table", type=int, required=True)
    p.add_argument("--rows", type=_int_list, help="comma-separated odd moduli")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("zdist", help="pmf, parity and mean of the stopped lattice-path distribution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_rational, required=True)
    p.add_argument("--format", choices=("json", "csv"),
                   default=default_fmt if default_fmt in ("json", "csv") else "csv")
    p.set_defaults(func=cmd_zdist)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return ns.func(ns, out)
    except ChainStructureError as exc:
        print(f"parrondo: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except (CLIError, PatternSyntaxError, ValueError) as exc:
        print(f"parrondo: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
