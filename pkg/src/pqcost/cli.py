"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from . import cost
from .cost import AreaSource, CostReport, MemoryPowerInterpretation, Metric, TrendRow
from .errata import find_errata
from .memory import MissingMacroError
from .multipliers import Method
from .paths import DATA_ENV
from .profiles import ProfileSchemaError, bundled_profiles, get_profile, load_profile
from .svg import bar_chart, line_chart
from .verify import SUITES, run_verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

REPORT_COLUMNS = (
    "algorithm", "reference_model", "target_frequency_MHz", "memory_power_interpretation", "area_source",
    "area_rom_mm2", "area_ram_mm2", "area_mult_mm2", "area_hash_mm2", "area_total_mm2",
    "dynamic_rom_mW", "dynamic_ram_mW", "dynamic_mult_mW", "dynamic_hash_mW", "dynamic_total_mW",
    "leakage_rom_mW", "leakage_ram_mW", "leakage_mult_mW", "leakage_hash_mW", "leakage_total_mW",
    "latency_mult_cycles", "latency_hash_cycles", "flags",
)
RANK_COLUMNS = ("rank", "algorithm", "reference_model", "metric", "value", "excluded_from_charts")
SWEEP_COLUMNS = ("method", "exponent", "width_bits", "cycles", "cells", "area_mm2", "power_mW", "extrapolated")


class UsageError(Exception):
    pass


def report_row(r: CostReport) -> dict:
    row = {
        "algorithm": r.algorithm,
        "reference_model": r.reference_model,
        "target_frequency_MHz": r.target_frequency_MHz,
        "memory_power_interpretation": r.memory_power_interpretation.value,
        "area_source": r.area_source.value,
    }
    for prefix, part, unit in (("area", r.area_mm2, "mm2"), ("dynamic", r.dynamic_power_mW, "mW"),
                               ("leakage", r.leakage_power_mW, "mW")):
        for key, value in part.to_dict().items():
            row[f"{prefix}_{key}_{unit}"] = value
    row["latency_mult_cycles"] = r.latency_cycles.get("mult", "")
    row["latency_hash_cycles"] = r.latency_cycles.get("hash", "")
    row["flags"] = ";".join(r.flags)
    return row


def rank_rows(reports: Sequence[CostReport], metric: Metric) -> list[dict]:
    return [
        {"rank": i, "algorithm": r.algorithm, "reference_model": r.reference_model, "metric": metric.value,
         "value": cost.metric_value(r, metric), "excluded_from_charts": r.excluded_from_charts}
        for i, r in enumerate(cost.rank(reports, metric), start=1)
    ]


def sweep_row(t: TrendRow) -> dict:
    return asdict(t)


def to_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="raise")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def to_json(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _settings(args) -> dict:
    return {
        "freq_MHz": args.freq,
        "interpretation": MemoryPowerInterpretation.parse(args.interpretation),
        "area_source": AreaSource(args.area_source),
    }


def _resolve(selector: str):
    path = Path(selector)
    if path.suffix == ".json" or path.is_file():
        try:
            return load_profile(path)
        except (OSError, ProfileSchemaError) as exc:
            raise UsageError(f"cannot load profile {selector}: {exc}") from None
    try:
        return get_profile(selector)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _estimate_reports(args, selectors: Sequence[str] | None = None) -> list[CostReport]:
    profiles = [_resolve(s) for s in selectors] if selectors else bundled_profiles()
    try:
        return [cost.estimate(p, **_settings(args)) for p in profiles]
    except (cost.MissingCostError, MissingMacroError) as exc:
        raise UsageError(str(exc)) from None


# -- commands ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    findings = run_verify(args.only)
    lines = [f"[{f.severity}] {f.suite}: {f.subject}: {f.message}" for f in findings]
    errors = sum(f.severity == "error" for f in findings)
    errata = sum(f.severity == "erratum" for f in findings)
    lines.append(f"verify: {errors} errors, {errata} errata listed")
    print("\n".join(lines))
    return EXIT_FAILED if errors else EXIT_OK


def cmd_estimate(args) -> int:
    reports = _estimate_reports(args, args.algorithm)
    if args.format == "svg":
        raise UsageError("svg output is available for rank and sweep")
    if args.format == "json":
        docs = [r.to_dict() for r in reports]
        _emit(to_json(docs[0] if len(docs) == 1 else docs), args.output)
    else:
        _emit(to_csv([report_row(r) for r in reports], REPORT_COLUMNS), args.output)
    return EXIT_OK


def cmd_rank(args) -> int:
    metric = Metric.parse(args.metric)
    reports = _estimate_reports(args, args.algorithm or None)
    rows = rank_rows(reports, metric)
    if args.format == "json":
        _emit(to_json(rows), args.output)
    elif args.format == "svg":
        shown = [r for r in rows if not r["excluded_from_charts"]]
        unit = "mm^2" if metric is Metric.AREA else "mW"
        title = f"Total {'area' if metric is Metric.AREA else 'dynamic power'} by algorithm, ascending"
        _emit(bar_chart(title, [r["algorithm"] for r in shown], [r["value"] for r in shown],
                        f"{metric.value} ({unit})"), args.output)
    else:
        _emit(to_csv(rows, RANK_COLUMNS), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        methods = [Method.parse(m) for m in args.methods.split(",") if m.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not methods or any(m not in cost.TREND_METHODS for m in methods):
        raise UsageError("sweep methods must be drawn from sbm, km2, tcm3, tcm4")
    if args.min < 0 or args.max < args.min:
        raise UsageError("need 0 <= --min <= --max")
    rows = cost.sweep_multiplier_trends(methods, range(args.min, args.max + 1))
    if args.format == "json":
        _emit(to_json([sweep_row(t) for t in rows]), args.output)
    elif args.format == "svg":
        exps = list(range(args.min, args.max + 1))
        series = {m.name: [getattr(t, args.y) for t in rows if t.method == m.name] for m in methods}
        _emit(line_chart(f"Multiplier {args.y} versus operand width", [f"2^{n}" for n in exps],
                         series, args.y), args.output)
    else:
        _emit(to_csv([sweep_row(t) for t in rows], SWEEP_COLUMNS), args.output)
    return EXIT_OK


def cmd_report(args) -> int:
    reports = _estimate_reports(args)
    if args.format == "svg":
        raise UsageError("svg output is available for rank and sweep")
    if args.format == "csv":
        _emit(to_csv([report_row(r) for r in reports], REPORT_COLUMNS), args.output)
        return EXIT_OK
    document = {
        "settings": {
            "target_frequency_MHz": args.freq,
            "memory_power_interpretation": MemoryPowerInterpretation.parse(args.interpretation).value,
            "area_source": args.area_source,
        },
        "reports": [r.to_dict() for r in reports],
        "ranking": {m.value: [row["algorithm"] for row in rank_rows(reports, m)] for m in Metric},
        "chart_excluded": sorted(r.algorithm for r in reports if r.excluded_from_charts),
        "reference_deltas": [asdict(d) for d in cost.reproduce_reference_deltas()],
        "errata": [asdict(e) for e in find_errata()],
    }
    _emit(to_json(document), args.output)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def _cost_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--freq", type=float, default=cost.REPORT_FREQUENCY_MHZ, help="target frequency in MHz")
    p.add_argument("--interpretation", default=MemoryPowerInterpretation.AT_REPORT_FREQUENCY.value,
                   choices=[m.value for m in MemoryPowerInterpretation],
                   help="how datasheet memory dynamic power is read")
    p.add_argument("--area-source", default=AreaSource.PRINTED.value, choices=[a.value for a in AreaSource],
                   help="published macro areas or W x H x n")


def _output_options(p: argparse.ArgumentParser, formats: Sequence[str], default: str = "csv") -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqcost", description="Hardware cost estimates for lattice PQC building blocks.")
    parser.add_argument("--data-dir", help=f"bundled data directory (also ${DATA_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the hash, multiplier and table self-checks")
    p.add_argument("--only", choices=SUITES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("estimate", help="cost breakdown for one or more algorithms")
    p.add_argument("algorithm", nargs="+", help="bundled id, name, or a profile JSON path")
    _cost_options(p)
    _output_options(p, ("csv", "json", "svg"))
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("rank", help="order algorithms by total area or dynamic power")
    p.add_argument("--metric", default="area", choices=[m.value for m in Metric])
    p.add_argument("--algorithm", action="append", help="restrict to these (repeatable)")
    _cost_options(p)
    _output_options(p, ("csv", "json", "svg"))
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("sweep", help="multiplier trend table over widths 2^min..2^max")
    p.add_argument("--methods", default="sbm,km2,tcm3,tcm4")
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--y", default="area_mm2", choices=["cycles", "cells", "area_mm2", "power_mW"],
                   help="quantity plotted in svg output")
    _output_options(p, ("csv", "json", "svg"))
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", help="all bundled algorithms in one document")
    _cost_options(p)
    _output_options(p, ("csv", "json", "svg"), default="json")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.data_dir:
        os.environ[DATA_ENV] = args.data_dir
    if hasattr(args, "freq") and not args.freq >= 0:
        print("pqcost: error: --freq must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"pqcost: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
