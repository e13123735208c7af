"""Area and power aggregation, ranking, latency and multiplier trend estimates.

Area is the sum of ROM and RAM macro areas, multiplier areas and hash-core
areas.  Dynamic power sums the same components; leakage is reported on its own.
Logic costs are the synthesized values at :data:`REPORT_FREQUENCY_MHZ`, and their
dynamic part scales linearly with the target frequency.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .hashes.cycles import hash_cycle_breakdown
from .memory import CompiledMacro, Datasheet, MemoryKind, load_datasheet, macro_area_mm2
from .multipliers import Method, multiply_cycles
from .paths import data_dir
from .profiles import AlgorithmProfile, ComponentCost, MultiplierUnit, bundled_profiles

REPORT_FREQUENCY_MHZ = 500.0

# Profiles whose multiplier cost is an estimate; kept in rankings, left out of charts.
CHART_EXCLUDED = ("FrodoKEM",)


class MemoryPowerInterpretation(Enum):
    """How the datasheet's dynamic-power column is turned into microwatts."""

    AT_REPORT_FREQUENCY = "at-report-frequency"  # value x n, already at 500 MHz
    PER_MHZ = "per-mhz"  # value x n x f
    ROW_SUM_X100 = "row-sum-x100"  # value x 100 once per datasheet row, n ignored

    @classmethod
    def parse(cls, text: "str | MemoryPowerInterpretation") -> "MemoryPowerInterpretation":
        if isinstance(text, cls):
            return text
        key = text.strip().lower().replace("_", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ValueError(f"unknown memory power interpretation {text!r}; choose from "
                         + ", ".join(m.value for m in cls))


class AreaSource(Enum):
    PRINTED = "printed"  # published macro totals where the datasheet has them
    RECOMPUTED = "recomputed"  # always W x H x n


class Metric(Enum):
    AREA = "area"
    POWER = "power"

    @classmethod
    def parse(cls, text: "str | Metric") -> "Metric":
        if isinstance(text, cls):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"metric must be area or power, got {text!r}") from None


class MissingCostError(LookupError):
    pass


@dataclass(frozen=True)
class Breakdown:
    rom: float = 0.0
    ram: float = 0.0
    mult: float = 0.0
    hash: float = 0.0

    def __post_init__(self) -> None:
        for name in ("rom", "ram", "mult", "hash"):
            if getattr(self, name) < 0:
                raise ValueError(f"breakdown entry {name} is negative")

    @property
    def total(self) -> float:
        return self.rom + self.ram + self.mult + self.hash

    def __add__(self, other: "Breakdown") -> "Breakdown":
        return Breakdown(self.rom + other.rom, self.ram + other.ram,
                         self.mult + other.mult, self.hash + other.hash)

    def to_dict(self) -> dict:
        return {**asdict(self), "total": self.total}


@dataclass(frozen=True)
class CostReport:
    algorithm: str
    reference_model: str
    area_mm2: Breakdown
    dynamic_power_mW: Breakdown
    leakage_power_mW: Breakdown
    latency_cycles: dict
    target_frequency_MHz: float
    memory_power_interpretation: MemoryPowerInterpretation
    area_source: AreaSource
    flags: tuple[str, ...] = ()
    unmodeled: tuple[str, ...] = ()

    @property
    def excluded_from_charts(self) -> bool:
        return "estimated-multiplier" in self.flags

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "reference_model": self.reference_model,
            "target_frequency_MHz": self.target_frequency_MHz,
            "memory_power_interpretation": self.memory_power_interpretation.value,
            "area_source": self.area_source.value,
            "area_mm2": self.area_mm2.to_dict(),
            "dynamic_power_mW": self.dynamic_power_mW.to_dict(),
            "leakage_power_mW": self.leakage_power_mW.to_dict(),
            "latency_cycles": dict(self.latency_cycles),
            "flags": list(self.flags),
            "unmodeled": list(self.unmodeled),
        }


# -- component costs -------------------------------------------------------------

def _check_frequency(freq_MHz: float) -> None:
    if not (freq_MHz >= 0 and math.isfinite(freq_MHz)):
        raise ValueError(f"frequency must be a finite value >= 0, got {freq_MHz!r}")


def _memory_rows(profile: AlgorithmProfile, kind: MemoryKind, datasheet: Datasheet):
    section = profile.rom if kind is MemoryKind.ROM else profile.ram
    for spec in section.instances:
        yield spec, datasheet.lookup(kind, spec.p, spec.q, profile.name)


def _macro_area(macro: CompiledMacro, n: int, p: int, q: int, source: AreaSource) -> float:
    exact_row = (macro.p, macro.q, macro.n) == (p, q, n)
    if source is AreaSource.PRINTED and exact_row and macro.printed_area_mm2 is not None:
        return macro.printed_area_mm2
    return macro_area_mm2(macro, n)


def _unit_cost(unit: MultiplierUnit, gate_model: "GateModelParams | None") -> ComponentCost:
    if unit.cost is not None:
        return unit.cost
    if gate_model is None:
        raise MissingCostError(f"multiplier unit {unit.label} has no cost row and no gate model was given")
    cells = gate_model.cells(unit.op1_bits, unit.op2_bits)
    return ComponentCost(cells * gate_model.area_per_cell_um2 / 1e6,
                         cells * gate_model.power_per_cell_uW, 0.0, estimated=True)


def _hash_costs(profile: AlgorithmProfile) -> list[ComponentCost]:
    out = []
    for h in profile.hash_cores:
        if h.cost is None:
            raise MissingCostError(f"hash core {h.function.value} of {profile.name} has no cost row")
        out.append(h.cost)
    return out


def aggregate_area(
    profile: AlgorithmProfile,
    area_source: AreaSource = AreaSource.PRINTED,
    datasheet: Datasheet | None = None,
    gate_model: "GateModelParams | None" = None,
) -> Breakdown:
    """ROM + RAM + multiplier + hash area in mm^2."""
    ds = datasheet or load_datasheet()
    rom = sum(_macro_area(m, s.n, s.p, s.q, area_source) for s, m in _memory_rows(profile, MemoryKind.ROM, ds))
    ram = sum(_macro_area(m, s.n, s.p, s.q, area_source) for s, m in _memory_rows(profile, MemoryKind.RAM, ds))
    mult = sum(_unit_cost(u, gate_model).area_mm2 for u in profile.multiplier_units)
    hashes = sum(c.area_mm2 for c in _hash_costs(profile))
    return Breakdown(float(rom), float(ram), float(mult), float(hashes))


def _memory_dynamic_uW(rows, interpretation: MemoryPowerInterpretation, freq_MHz: float) -> float:
    scale = freq_MHz / REPORT_FREQUENCY_MHZ
    if interpretation is MemoryPowerInterpretation.AT_REPORT_FREQUENCY:
        return sum(m.dynamic_uWxF * s.n for s, m in rows) * scale
    if interpretation is MemoryPowerInterpretation.PER_MHZ:
        return sum(m.dynamic_uWxF * s.n for s, m in rows) * freq_MHz
    return sum(m.dynamic_uWxF for _, m in rows) * 100 * scale


def aggregate_power(
    profile: AlgorithmProfile,
    freq_MHz: float = REPORT_FREQUENCY_MHZ,
    interpretation: MemoryPowerInterpretation = MemoryPowerInterpretation.AT_REPORT_FREQUENCY,
    datasheet: Datasheet | None = None,
    gate_model: "GateModelParams | None" = None,
) -> tuple[Breakdown, Breakdown]:
    """(dynamic, leakage) breakdowns in mW at ``freq_MHz``."""
    _check_frequency(freq_MHz)
    ds = datasheet or load_datasheet()
    interpretation = MemoryPowerInterpretation.parse(interpretation)
    rom_rows = list(_memory_rows(profile, MemoryKind.ROM, ds))
    ram_rows = list(_memory_rows(profile, MemoryKind.RAM, ds))
    units = [_unit_cost(u, gate_model) for u in profile.multiplier_units]
    hashes = _hash_costs(profile)
    scale = freq_MHz / REPORT_FREQUENCY_MHZ
    dynamic = Breakdown(
        _memory_dynamic_uW(rom_rows, interpretation, freq_MHz) / 1000,
        _memory_dynamic_uW(ram_rows, interpretation, freq_MHz) / 1000,
        sum(c.dynamic_uW for c in units) * scale / 1000,
        sum(c.dynamic_uW for c in hashes) * scale / 1000,
    )
    leakage = Breakdown(
        sum(m.static_uW * s.n for s, m in rom_rows) / 1000,
        sum(m.static_uW * s.n for s, m in ram_rows) / 1000,
        sum(c.leakage_uW for c in units) / 1000,
        sum(c.leakage_uW for c in hashes) / 1000,
    )
    return dynamic, leakage


# -- latency -----------------------------------------------------------------------

@dataclass(frozen=True)
class LatencyRow:
    kind: str  # "mult" or "hash"
    name: str
    method: str
    width_bits: int
    cycles: int
    time_ns: float


def job_cycles(job) -> int:
    if job.method is Method.NTT:
        points = job.ntt_points or job.op1_bits
        return multiply_cycles(Method.NTT, points, points=points)
    return multiply_cycles(job.method, max(job.op1_bits, job.op2_bits))


def latency_estimate(
    profile: AlgorithmProfile,
    freq_MHz: float = REPORT_FREQUENCY_MHZ,
    message_bits: int | None = None,
    output_bits: int | None = None,
) -> list[LatencyRow]:
    """Cycles and wall time per multiplication job and hash core.

    Hash rows use each core's bundled message and output sizes unless
    ``message_bits`` / ``output_bits`` override them.
    """
    if not freq_MHz > 0:
        raise ValueError("latency needs a positive frequency")
    ns = 1000.0 / freq_MHz
    rows = []
    for job in profile.mult_jobs:
        cycles = job_cycles(job)
        rows.append(LatencyRow("mult", job.function_name, job.method.name,
                               max(job.op1_bits, job.op2_bits), cycles, cycles * ns))
    for h in profile.hash_cores:
        msg = h.message_bits if message_bits is None else message_bits
        out = h.required_output_bits if output_bits is None else output_bits
        cycles = hash_cycle_breakdown(h.core_spec(), msg, out).total
        rows.append(LatencyRow("hash", h.function.value, h.function.value, out, cycles, cycles * ns))
    return rows


def _latency_summary(rows: Iterable[LatencyRow]) -> dict:
    summary = {"mult": 0, "hash": 0}
    for r in rows:
        summary[r.kind] += r.cycles
    return summary


def estimate(
    profile: AlgorithmProfile,
    freq_MHz: float = REPORT_FREQUENCY_MHZ,
    interpretation: MemoryPowerInterpretation = MemoryPowerInterpretation.AT_REPORT_FREQUENCY,
    area_source: AreaSource = AreaSource.PRINTED,
    datasheet: Datasheet | None = None,
    gate_model: "GateModelParams | None" = None,
) -> CostReport:
    interpretation = MemoryPowerInterpretation.parse(interpretation)
    area = aggregate_area(profile, area_source, datasheet, gate_model)
    dynamic, leakage = aggregate_power(profile, freq_MHz, interpretation, datasheet, gate_model)
    latency = _latency_summary(latency_estimate(profile, freq_MHz)) if freq_MHz > 0 else {}
    flags = ("estimated-multiplier",) if profile.has_estimated_costs else ()
    unmodeled = tuple(f"{o.function_name} {o.operator}" for o in profile.other_ops)
    return CostReport(profile.name, profile.reference_model, area, dynamic, leakage, latency,
                      float(freq_MHz), interpretation, area_source, flags, unmodeled)


# -- ranking ---------------------------------------------------------------------------

def metric_value(report: CostReport, metric: Metric) -> float:
    return report.area_mm2.total if metric is Metric.AREA else report.dynamic_power_mW.total


def rank(reports: Sequence[CostReport], metric: "Metric | str" = Metric.AREA) -> list[CostReport]:
    """Ascending by metric; ties go to the alphabetically first algorithm."""
    metric = Metric.parse(metric)
    return sorted(reports, key=lambda r: (metric_value(r, metric), r.algorithm))


def chart_reports(reports: Iterable[CostReport]) -> list[CostReport]:
    return [r for r in reports if not r.excluded_from_charts]


def estimate_all(**kwargs) -> list[CostReport]:
    return [estimate(p, **kwargs) for p in bundled_profiles()]


# -- gate model --------------------------------------------------------------------------

@dataclass(frozen=True)
class GateFitResidual:
    label: str
    predicted_area_mm2: float
    actual_area_mm2: float
    predicted_power_uW: float
    actual_power_uW: float

    @property
    def area_error(self) -> float:
        return self.predicted_area_mm2 / self.actual_area_mm2 - 1

    @property
    def power_error(self) -> float:
        return self.predicted_power_uW / self.actual_power_uW - 1


@dataclass(frozen=True)
class GateModelParams:
    """Cell-count model of a shift-and-add multiplier.

    Registers hold ``flipflops_per_operand_bit / 2`` cells per bit of each
    operand plus a cycle counter; the combinational cloud grows as
    ``comb_coeff * (m + n) ** comb_exponent``.
    """

    flipflops_per_operand_bit: float = 2.0
    comb_coeff: float = 6.0
    comb_exponent: float = 1.18
    area_per_cell_um2: float = 1.96
    power_per_cell_uW: float = 0.17
    adder_cells_per_bit: float = 4.0
    residuals: tuple[GateFitResidual, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for name in ("flipflops_per_operand_bit", "comb_coeff", "comb_exponent",
                     "area_per_cell_um2", "power_per_cell_uW", "adder_cells_per_bit"):
            if not getattr(self, name) > 0:
                raise ValueError(f"gate model constant {name} must be positive")

    def sequential_cells(self, m: int, n: int) -> float:
        return self.flipflops_per_operand_bit / 2 * (m + n) + max(m, n).bit_length()

    def combinational_cells(self, m: int, n: int) -> float:
        return self.comb_coeff * (m + n) ** self.comb_exponent

    def cells(self, m: int, n: int) -> float:
        return self.sequential_cells(m, n) + self.combinational_cells(m, n)


def _calibration_units() -> list[MultiplierUnit]:
    seen, units = set(), []
    for p in bundled_profiles():
        for u in p.multiplier_units:
            key = (u.op1_bits, u.op2_bits)
            if u.cost is None or u.cost.estimated or u.combinational_cells is None or key in seen:
                continue
            seen.add(key)
            units.append(u)
    return units


def fit_gate_model(units: Sequence[MultiplierUnit] | None = None,
                   flipflops_per_operand_bit: float = 2.0) -> GateModelParams:
    """Fit the combinational power law and per-cell constants by least squares in log space."""
    units = list(units) if units is not None else _calibration_units()
    if len(units) < 2:
        raise ValueError("need at least two calibration units")
    xs = [math.log(u.op1_bits + u.op2_bits) for u in units]
    ys = [math.log(u.combinational_cells) for u in units]
    slope, intercept = statistics.linear_regression(xs, ys)
    draft = GateModelParams(flipflops_per_operand_bit, math.exp(intercept), slope)
    cells = [draft.cells(u.op1_bits, u.op2_bits) for u in units]
    area = statistics.geometric_mean([u.cost.area_mm2 * 1e6 / c for u, c in zip(units, cells)])
    power = statistics.geometric_mean([u.cost.dynamic_uW / c for u, c in zip(units, cells)])
    residuals = tuple(
        GateFitResidual(u.label, c * area / 1e6, u.cost.area_mm2, c * power, u.cost.dynamic_uW)
        for u, c in zip(units, cells)
    )
    return GateModelParams(flipflops_per_operand_bit, draft.comb_coeff, draft.comb_exponent,
                           area, power, residuals=residuals)


@lru_cache(maxsize=1)
def default_gate_model() -> GateModelParams:
    return fit_gate_model()


# Split-recombine shapes: (sub-multiplications, extra bits per limb, adder bits per operand bit, ways).
_SPLIT_SHAPE = {
    Method.KM2: (3, 1, 4.5, 2),
    Method.TCM3: (5, 2, 10.7, 3),
    Method.TCM4: (7, 3, 19.0, 4),
}
TREND_METHODS = (Method.SBM, Method.KM2, Method.TCM3, Method.TCM4)


def method_cells(method: Method, m: int, model: GateModelParams) -> float:
    """Estimated cell count of an m x m multiplier built with ``method``."""
    if method is Method.SBM:
        return model.cells(m, m)
    if method not in _SPLIT_SHAPE:
        raise ValueError(f"no gate estimate for {method.name}")
    subs, extra, adder_bits, ways = _SPLIT_SHAPE[method]
    h = -(-m // ways) + extra
    adders = adder_bits * m * model.adder_cells_per_bit
    output_register = 2 * m * model.flipflops_per_operand_bit / 2
    return subs * model.cells(h, h) + adders + output_register


@dataclass(frozen=True)
class TrendRow:
    method: str
    exponent: int
    width_bits: int
    cycles: int
    cells: float
    area_mm2: float
    power_mW: float
    extrapolated: bool


def sweep_multiplier_trends(
    methods: Sequence["Method | str"] = TREND_METHODS,
    exponents: Iterable[int] = range(1, 13),
    gate_model: GateModelParams | None = None,
) -> list[TrendRow]:
    model = gate_model or default_gate_model()
    rows = []
    for raw in methods:
        method = Method.parse(raw)
        for n in exponents:
            if n < 0:
                raise ValueError("exponent must be >= 0")
            m = 1 << n
            cells = method_cells(method, m, model)
            rows.append(TrendRow(method.name, n, m, multiply_cycles(method, m), cells,
                                 cells * model.area_per_cell_um2 / 1e6,
                                 cells * model.power_per_cell_uW / 1000, not 1 <= n <= 12))
    return rows


# -- comparison with published accelerators ----------------------------------------------------

@dataclass(frozen=True)
class ReferenceRow:
    group: str
    algorithm: str
    variant: str
    security_level: int
    clock_period_ns: float
    frequency_MHz: float
    area_um2: float
    power_mW: float
    reference: str = ""
    printed_area_delta_pct: int | None = None
    printed_power_delta_pct: int | None = None


@dataclass(frozen=True)
class DeltaRow:
    algorithm: str
    variant: str
    reference: str
    area_um2: float
    reference_area_um2: float
    power_mW: float
    reference_power_mW: float
    area_delta_exact: float
    power_delta_exact: float
    area_delta_pct: int
    power_delta_pct: int
    printed_area_delta_pct: int | None = None
    printed_power_delta_pct: int | None = None

    @property
    def matches_printed(self) -> bool:
        return (self.area_delta_pct, self.power_delta_pct) == (
            self.printed_area_delta_pct, self.printed_power_delta_pct)


def round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def percent_delta(value: float, reference: float) -> float:
    if reference <= 0:
        raise ValueError("reference value must be positive")
    return (value - reference) / reference * 100


def load_reference_table(path=None) -> list[ReferenceRow]:
    rows = []
    with open(path or data_dir() / "table10.csv", newline="") as fh:
        for r in csv.DictReader(fh):
            opt = lambda key: int(r[key]) if r.get(key) else None  # noqa: E731
            rows.append(ReferenceRow(
                r["group"], r["algorithm"], r["variant"], int(r["security_level"]),
                float(r["clock_period_ns"]), float(r["frequency_MHz"]), float(r["area_um2"]),
                float(r["power_mW"]), r["reference"], opt("printed_area_delta_pct"),
                opt("printed_power_delta_pct"),
            ))
    return rows


def compare_against_reference(report: "CostReport | ReferenceRow", reference: ReferenceRow) -> DeltaRow:
    """Signed percentage deltas of ``report`` against ``reference``, rounded half away from zero."""
    if isinstance(report, CostReport):
        name, variant = report.algorithm, ""
        area, power = report.area_mm2.total * 1e6, report.dynamic_power_mW.total
        printed_area = printed_power = None
    else:
        name, variant = report.algorithm, report.variant
        area, power = report.area_um2, report.power_mW
        printed_area, printed_power = report.printed_area_delta_pct, report.printed_power_delta_pct
    da, dp = percent_delta(area, reference.area_um2), percent_delta(power, reference.power_mW)
    return DeltaRow(name, variant, reference.group, area, reference.area_um2, power, reference.power_mW,
                    da, dp, round_half_away(da), round_half_away(dp), printed_area, printed_power)


def reference_for(row: ReferenceRow, table: Sequence[ReferenceRow]) -> ReferenceRow:
    for r in table:
        if r.group != "this-work" and r.group == row.reference and r.algorithm == row.algorithm:
            return r
    raise KeyError(f"no reference row for {row.algorithm} in group {row.reference!r}")


def reproduce_reference_deltas(table: Sequence[ReferenceRow] | None = None) -> list[DeltaRow]:
    table = list(table) if table is not None else load_reference_table()
    return [compare_against_reference(r, reference_for(r, table)) for r in table if r.group == "this-work"]
