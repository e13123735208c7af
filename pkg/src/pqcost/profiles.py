"""Algorithm profiles: memory instances, multiplier jobs and hash cores.

Profiles are JSON documents.  Loading validates the schema and raises
:class:`ProfileSchemaError` with the offending field path; semantic checks
(printed sizes versus recomputed ones, datasheet coverage) are returned by
:func:`validate_profile` as findings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any

from .hashes.cycles import HashCoreSpec, HashFunction
from .memory import Datasheet, MemoryInstanceSpec, MemoryKind, MissingMacroError, instance_size_exact, load_datasheet
from .multipliers import Method
from .paths import data_dir

# Methods a Table-style mult job may name; SEGMENTED is an engine option, not a job method.
JOB_METHODS = (Method.SBM, Method.KM2, Method.TCM3, Method.TCM4, Method.NTT, Method.MONTGOMERY)


class ProfileSchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ComponentCost:
    area_mm2: float
    dynamic_uW: float
    leakage_uW: float
    estimated: bool = False


@dataclass(frozen=True)
class MemoryRecord:
    spec: MemoryInstanceSpec
    r_printed: float | None = None
    s_printed: float | None = None


@dataclass(frozen=True)
class MemorySection:
    kind: MemoryKind
    records: tuple[MemoryRecord, ...]
    total_printed: float | None = None

    @property
    def instances(self) -> list[MemoryInstanceSpec]:
        return [r.spec for r in self.records]


@dataclass(frozen=True)
class MultiplierUnit:
    label: str
    architecture: str
    op1_bits: int
    op2_bits: int
    cost: ComponentCost | None
    combinational_cells: int | None = None
    sequential_cells: int | None = None


@dataclass(frozen=True)
class MultJob:
    function_name: str
    method: Method
    op1_bits: int
    op2_bits: int
    op3_bits: int | None
    out_bits: int
    unit: str
    operator: str = "A x B"
    ntt_points: int | None = None


@dataclass(frozen=True)
class OtherOp:
    function_name: str
    operator: str
    method: str
    op1_bits: int
    op2_bits: int | None
    op3_bits: int | None
    out_bits: int
    note: str


@dataclass(frozen=True)
class HashCoreEntry:
    function: HashFunction
    instance_output_bits: int
    required_output_bits: int
    message_bits: int
    cost: ComponentCost | None
    N: str = ""
    S: str = ""

    def core_spec(self) -> HashCoreSpec:
        return HashCoreSpec.for_function(
            self.function, self.instance_output_bits, self.N.encode(), self.S.encode()
        )


@dataclass(frozen=True)
class AlgorithmProfile:
    id: str
    name: str
    reference_model: str
    security_level: int
    rom: MemorySection
    ram: MemorySection
    multiplier_units: tuple[MultiplierUnit, ...]
    mult_jobs: tuple[MultJob, ...]
    other_ops: tuple[OtherOp, ...]
    hash_cores: tuple[HashCoreEntry, ...]
    provenance: dict = field(default_factory=dict, compare=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def display_name(self) -> str:
        return f"{self.name} / {self.reference_model}"

    @property
    def has_estimated_costs(self) -> bool:
        return any(u.cost is not None and u.cost.estimated for u in self.multiplier_units)

    def unit(self, label: str) -> MultiplierUnit:
        for u in self.multiplier_units:
            if u.label == label:
                return u
        raise KeyError(label)


# -- parsing helpers ----------------------------------------------------------

def _get(doc: Any, key: str, path: str, kind: type | tuple, required: bool = True, default: Any = None) -> Any:
    if not isinstance(doc, dict):
        raise ProfileSchemaError(path, "expected an object")
    if key not in doc or doc[key] is None:
        if required:
            raise ProfileSchemaError(f"{path}.{key}", "missing required field")
        return default
    value = doc[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ProfileSchemaError(f"{path}.{key}", f"expected {names}, got {type(value).__name__}")
    return value


def _list(doc: Any, key: str, path: str) -> list:
    return _get(doc, key, path, list, required=False, default=[])


def _number(doc: Any, key: str, path: str, required: bool = True) -> float | None:
    value = _get(doc, key, path, (int, float), required=required)
    return None if value is None else float(value)


def _cost(doc: Any, path: str) -> ComponentCost | None:
    if doc is None:
        return None
    return ComponentCost(
        area_mm2=_number(doc, "area_mm2", path),
        dynamic_uW=_number(doc, "dynamic_uW", path),
        leakage_uW=_number(doc, "leakage_uW", path),
        estimated=bool(_get(doc, "estimated", path, bool, required=False, default=False)),
    )


def _memory(doc: Any, kind: MemoryKind, path: str) -> MemorySection:
    if doc is None:
        return MemorySection(kind, ())
    records = []
    for i, item in enumerate(_list(doc, "instances", path)):
        ipath = f"{path}.instances[{i}]"
        n, p, q = (_get(item, k, ipath, int) for k in ("n", "p", "q"))
        try:
            spec = MemoryInstanceSpec(kind, n, p, q)
        except ValueError as exc:
            raise ProfileSchemaError(ipath, str(exc)) from None
        records.append(MemoryRecord(spec, _number(item, "r_printed", ipath, False),
                                    _number(item, "s_printed", ipath, False)))
    return MemorySection(kind, tuple(records), _number(doc, "total_printed", path, False))


def _positive(value: int | None, path: str) -> None:
    if value is not None and value < 1:
        raise ProfileSchemaError(path, f"must be >= 1, got {value}")


def profile_from_dict(doc: Any) -> AlgorithmProfile:
    if not isinstance(doc, dict) or not doc:
        raise ProfileSchemaError("$", "profile document is empty or not an object")
    root = "$"
    level = _get(doc, "security_level", root, int)
    if not 0 <= level <= 5:
        raise ProfileSchemaError("$.security_level", f"must be in 0..5, got {level}")

    units = []
    for i, u in enumerate(_list(doc, "multiplier_units", root)):
        upath = f"$.multiplier_units[{i}]"
        unit = MultiplierUnit(
            label=_get(u, "label", upath, str),
            architecture=_get(u, "architecture", upath, str, required=False, default="SBM"),
            op1_bits=_get(u, "op1_bits", upath, int),
            op2_bits=_get(u, "op2_bits", upath, int),
            cost=_cost(u.get("cost"), f"{upath}.cost"),
            combinational_cells=_get(u, "combinational_cells", upath, int, required=False),
            sequential_cells=_get(u, "sequential_cells", upath, int, required=False),
        )
        _positive(unit.op1_bits, f"{upath}.op1_bits")
        _positive(unit.op2_bits, f"{upath}.op2_bits")
        units.append(unit)
    labels = {u.label for u in units}

    jobs = []
    for i, j in enumerate(_list(doc, "mult_jobs", root)):
        jpath = f"$.mult_jobs[{i}]"
        try:
            method = Method.parse(_get(j, "method", jpath, str))
        except ValueError as exc:
            raise ProfileSchemaError(f"{jpath}.method", str(exc)) from None
        if method not in JOB_METHODS:
            raise ProfileSchemaError(f"{jpath}.method", f"{method.name} is not a job method")
        job = MultJob(
            function_name=_get(j, "function_name", jpath, str),
            method=method,
            op1_bits=_get(j, "op1_bits", jpath, int),
            op2_bits=_get(j, "op2_bits", jpath, int),
            op3_bits=_get(j, "op3_bits", jpath, int, required=False),
            out_bits=_get(j, "out_bits", jpath, int),
            unit=_get(j, "unit", jpath, str),
            operator=_get(j, "operator", jpath, str, required=False, default="A x B"),
            ntt_points=_get(j, "ntt_points", jpath, int, required=False),
        )
        for key in ("op1_bits", "op2_bits", "op3_bits", "out_bits", "ntt_points"):
            _positive(getattr(job, key), f"{jpath}.{key}")
        if job.unit not in labels:
            raise ProfileSchemaError(f"{jpath}.unit", f"no multiplier unit labelled {job.unit!r}")
        jobs.append(job)

    others = []
    for i, o in enumerate(_list(doc, "other_ops", root)):
        opath = f"$.other_ops[{i}]"
        others.append(OtherOp(
            function_name=_get(o, "function_name", opath, str),
            operator=_get(o, "operator", opath, str),
            method=_get(o, "method", opath, str),
            op1_bits=_get(o, "op1_bits", opath, int),
            op2_bits=_get(o, "op2_bits", opath, int, required=False),
            op3_bits=_get(o, "op3_bits", opath, int, required=False),
            out_bits=_get(o, "out_bits", opath, int),
            note=_get(o, "note", opath, str, required=False, default=""),
        ))

    hashes = []
    for i, h in enumerate(_list(doc, "hash_cores", root)):
        hpath = f"$.hash_cores[{i}]"
        try:
            fn = HashFunction.parse(_get(h, "function", hpath, str))
        except ValueError as exc:
            raise ProfileSchemaError(f"{hpath}.function", str(exc)) from None
        entry = HashCoreEntry(
            function=fn,
            instance_output_bits=_get(h, "instance_output_bits", hpath, int),
            required_output_bits=_get(h, "required_output_bits", hpath, int, required=False)
            or _get(h, "instance_output_bits", hpath, int),
            message_bits=_get(h, "message_bits", hpath, int, required=False, default=0),
            cost=_cost(h.get("cost"), f"{hpath}.cost"),
            N=_get(h, "N", hpath, str, required=False, default=""),
            S=_get(h, "S", hpath, str, required=False, default=""),
        )
        try:
            entry.core_spec()
        except ValueError as exc:
            raise ProfileSchemaError(hpath, str(exc)) from None
        hashes.append(entry)

    return AlgorithmProfile(
        id=_get(doc, "id", root, str),
        name=_get(doc, "name", root, str),
        reference_model=_get(doc, "reference_model", root, str),
        security_level=level,
        rom=_memory(doc.get("rom"), MemoryKind.ROM, "$.rom"),
        ram=_memory(doc.get("ram"), MemoryKind.RAM, "$.ram"),
        multiplier_units=tuple(units),
        mult_jobs=tuple(jobs),
        other_ops=tuple(others),
        hash_cores=tuple(hashes),
        provenance=dict(doc.get("provenance") or {}),
    )


def _resolve_warnings(profile: AlgorithmProfile, datasheet: Datasheet) -> tuple[str, ...]:
    out = []
    for section in (profile.rom, profile.ram):
        for i, rec in enumerate(section.records):
            s = rec.spec
            try:
                macro = datasheet.lookup(s.kind, s.p, s.q, profile.name)
            except MissingMacroError as exc:
                out.append(f"{section.kind.value.lower()}.instances[{i}]: {exc}")
                continue
            if (macro.p, macro.q) != (s.p, s.q):
                out.append(
                    f"{section.kind.value.lower()}.instances[{i}]: {s.p}x{s.q} rounded up to "
                    f"datasheet row {macro.p}x{macro.q}"
                )
    return tuple(out)


def load_profile(source: "str | Path | dict", datasheet: Datasheet | None = None) -> AlgorithmProfile:
    """Load from a path, a JSON string or an already-parsed document."""
    if isinstance(source, dict):
        doc = source
    else:
        text = str(source)
        if isinstance(source, Path) or (text.strip() and not text.lstrip().startswith("{")
                                        and Path(text).is_file()):
            text = Path(text).read_text()
        try:
            doc = json.loads(text) if text.strip() else {}
        except json.JSONDecodeError as exc:
            raise ProfileSchemaError("$", f"invalid JSON: {exc}") from None
    profile = profile_from_dict(doc)
    warnings = _resolve_warnings(profile, datasheet or load_datasheet())
    return AlgorithmProfile(**{**profile.__dict__, "warnings": warnings})


def _cost_dict(cost: ComponentCost | None) -> dict | None:
    if cost is None:
        return None
    d = {"area_mm2": cost.area_mm2, "dynamic_uW": cost.dynamic_uW, "leakage_uW": cost.leakage_uW}
    if cost.estimated:
        d["estimated"] = True
    return d


def profile_to_dict(profile: AlgorithmProfile) -> dict:
    def memory(section: MemorySection) -> dict:
        return {
            "instances": [
                {"n": r.spec.n, "p": r.spec.p, "q": r.spec.q, "r_printed": r.r_printed, "s_printed": r.s_printed}
                for r in section.records
            ],
            "total_printed": section.total_printed,
        }

    doc: dict[str, Any] = {"provenance": profile.provenance} if profile.provenance else {}
    doc.update(
        id=profile.id,
        name=profile.name,
        reference_model=profile.reference_model,
        security_level=profile.security_level,
        rom=memory(profile.rom),
        ram=memory(profile.ram),
        multiplier_units=[
            {"label": u.label, "architecture": u.architecture, "op1_bits": u.op1_bits, "op2_bits": u.op2_bits,
             "combinational_cells": u.combinational_cells, "sequential_cells": u.sequential_cells,
             "cost": _cost_dict(u.cost)}
            for u in profile.multiplier_units
        ],
        mult_jobs=[
            {k: v for k, v in {
                "function_name": j.function_name, "operator": j.operator, "method": j.method.name,
                "op1_bits": j.op1_bits, "op2_bits": j.op2_bits, "op3_bits": j.op3_bits,
                "out_bits": j.out_bits, "unit": j.unit, "ntt_points": j.ntt_points,
            }.items() if k != "ntt_points" or v is not None}
            for j in profile.mult_jobs
        ],
        other_ops=[
            {"function_name": o.function_name, "operator": o.operator, "method": o.method,
             "op1_bits": o.op1_bits, "op2_bits": o.op2_bits, "op3_bits": o.op3_bits,
             "out_bits": o.out_bits, "note": o.note}
            for o in profile.other_ops
        ],
        hash_cores=[
            {k: v for k, v in {
                "function": h.function.value, "instance_output_bits": h.instance_output_bits,
                "required_output_bits": h.required_output_bits, "message_bits": h.message_bits,
                "cost": _cost_dict(h.cost), "N": h.N, "S": h.S,
            }.items() if k not in ("N", "S") or h.N or h.S}
            for h in profile.hash_cores
        ],
    )
    return doc


def serialize_profile(profile: AlgorithmProfile) -> str:
    return json.dumps(profile_to_dict(profile), indent=2) + "\n"


# -- validation ----------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    severity: str  # "error", "warning" or "erratum"
    path: str
    message: str
    printed: float | None = None
    recomputed: float | None = None


def _fmt(x: Fraction) -> float:
    return float(x)


def validate_profile(profile: "AlgorithmProfile | dict", datasheet: Datasheet | None = None) -> list[Finding]:
    """Findings for a loaded profile or a raw document; schema problems become errors."""
    if not isinstance(profile, AlgorithmProfile):
        try:
            profile = profile_from_dict(profile)
        except ProfileSchemaError as exc:
            return [Finding("error", exc.path, str(exc))]
    findings: list[Finding] = []
    if not 0 <= profile.security_level <= 5:
        findings.append(Finding("error", "security_level", f"{profile.security_level} outside 0..5"))
    for section in (profile.rom, profile.ram):
        prefix = section.kind.value.lower()
        total = Fraction(0)
        for i, rec in enumerate(section.records):
            s = rec.spec
            path = f"{prefix}.instances[{i}]"
            if min(s.n, s.p, s.q) < 1:
                findings.append(Finding("error", path, "n, p and q must be >= 1"))
                continue
            r = instance_size_exact(s.p, s.q)
            total += s.n * r
            if rec.r_printed is not None and rec.r_printed != _fmt(r):
                findings.append(Finding("erratum", f"{path}.r", f"printed r for {s.p}x{s.q}",
                                        rec.r_printed, _fmt(r)))
            if rec.s_printed is not None and rec.s_printed != _fmt(s.n * r):
                findings.append(Finding("erratum", f"{path}.s", f"printed s for {s.n}x({s.p}x{s.q})",
                                        rec.s_printed, _fmt(s.n * r)))
        if section.total_printed is not None and section.total_printed != _fmt(total):
            findings.append(Finding("erratum", f"{prefix}.total", "printed Total_size",
                                    section.total_printed, _fmt(total)))
    labels = {u.label for u in profile.multiplier_units}
    for i, job in enumerate(profile.mult_jobs):
        if job.unit not in labels:
            findings.append(Finding("error", f"mult_jobs[{i}].unit", f"unknown unit {job.unit!r}"))
        if min(job.op1_bits, job.op2_bits, job.out_bits) < 1:
            findings.append(Finding("error", f"mult_jobs[{i}]", "operand widths must be >= 1"))
    for i, unit in enumerate(profile.multiplier_units):
        if unit.cost is None:
            findings.append(Finding("warning", f"multiplier_units[{i}]", f"{unit.label} has no cost row"))
        elif unit.cost.estimated:
            findings.append(Finding("warning", f"multiplier_units[{i}]",
                                    f"{unit.label} cost is estimated, not synthesized"))
    for i, h in enumerate(profile.hash_cores):
        if h.cost is None:
            findings.append(Finding("warning", f"hash_cores[{i}]", f"{h.function.value} has no cost row"))
    for w in _resolve_warnings(profile, datasheet or load_datasheet()):
        findings.append(Finding("warning", w.split(":", 1)[0], w.split(":", 1)[1].strip()))
    return findings


# -- bundled profiles -------------------------------------------------------------

def profiles_dir() -> Path:
    return data_dir() / "profiles"


@lru_cache(maxsize=None)
def _load_dir(directory: str) -> tuple[AlgorithmProfile, ...]:
    paths = sorted(Path(directory).glob("*.json"))
    return tuple(sorted((load_profile(p) for p in paths), key=lambda p: p.name))


def bundled_profiles() -> list[AlgorithmProfile]:
    return list(_load_dir(str(profiles_dir())))


def get_profile(key: str) -> AlgorithmProfile:
    """Find a bundled profile by id, reference model or algorithm name (case-insensitive)."""
    wanted = key.strip().lower()
    for p in bundled_profiles():
        if wanted in (p.id.lower(), p.reference_model.lower(), p.name.lower()):
            return p
    names = ", ".join(p.id for p in bundled_profiles())
    raise KeyError(f"unknown algorithm {key!r}; available: {names}")
