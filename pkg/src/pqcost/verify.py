"""Self-check suites behind ``pqcost verify``."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errata import find_errata
from .hashes.vectors import run_vector_suite
from .memory import load_datasheet
from .multipliers import ENGINES, MultMode, segmented_sbm_multiply
from .operand import random_operand
from .paths import data_dir
from .profiles import ProfileSchemaError, load_profile, validate_profile

SUITES = ("hashes", "multipliers", "tables")


@dataclass(frozen=True)
class VerifyFinding:
    suite: str
    severity: str  # "ok", "warning", "erratum" or "error"
    subject: str
    message: str


def _xor_oracle(x: int, y: int) -> int:
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        x <<= 1
        y >>= 1
    return acc


def hash_suite(directory: Path | None = None) -> list[VerifyFinding]:
    out = []
    for rep in run_vector_suite(directory or data_dir() / "vectors"):
        name = Path(rep.path).name
        if rep.ok:
            out.append(VerifyFinding("hashes", "ok", name, f"{rep.total} vectors match"))
        for msg in rep.errors + rep.failures:
            out.append(VerifyFinding("hashes", "error", name, msg))
        if not rep.ok and not rep.errors and not rep.failures:
            out.append(VerifyFinding("hashes", "error", name, "no vectors evaluated"))
    return out


def multiplier_suite(widths=(8, 64, 1024), pairs: int = 10, seed: int = 0) -> list[VerifyFinding]:
    out = []
    for width in widths:
        mismatches = 0
        for i in range(pairs):
            a = random_operand(width, seed * 100003 + 2 * i)
            b = random_operand(width, seed * 100003 + 2 * i + 1)
            want = {MultMode.INTEGER: a.value * b.value, MultMode.CARRYLESS: _xor_oracle(a.value, b.value)}
            for mode, expected in want.items():
                results = [engine(a, b, mode) for engine in ENGINES.values()]
                results.append(segmented_sbm_multiply(a, b, min(8, width), mode))
                mismatches += sum(r.product.value != expected for r in results)
        severity = "ok" if mismatches == 0 else "error"
        out.append(VerifyFinding("multipliers", severity, f"{width}-bit",
                                 f"{mismatches} mismatches over {pairs} pairs x 5 engines x 2 modes"))
    return out


def table_suite(profile_dir: Path | None = None) -> list[VerifyFinding]:
    out = []
    directory = profile_dir or data_dir() / "profiles"
    datasheet_path = data_dir() / "datasheet.csv"
    if not datasheet_path.exists():
        return [VerifyFinding("tables", "error", str(datasheet_path), "missing datasheet")]
    paths = sorted(directory.glob("*.json"))
    if not paths:
        return [VerifyFinding("tables", "error", str(directory), "no profiles found")]
    profiles = []
    for path in paths:
        try:
            profiles.append(load_profile(path))
        except (OSError, ProfileSchemaError) as exc:
            out.append(VerifyFinding("tables", "error", str(path), str(exc)))
    for p in profiles:
        for f in validate_profile(p):
            if f.severity == "error":
                out.append(VerifyFinding("tables", "error", p.id, f"{f.path}: {f.message}"))
    for e in find_errata(profiles, load_datasheet(datasheet_path)):
        where = f"{e.n}x({e.p}x{e.q})" if e.p else "total"
        tag = "known" if e.known else "new"
        out.append(VerifyFinding("tables", "erratum", f"{e.algorithm} {e.kind} {where}",
                                 f"{e.quantity} printed {e.printed:g}, recomputed {e.recomputed:g} ({tag})"))
    out.append(VerifyFinding("tables", "ok", "profiles", f"{len(profiles)} profiles recomputed"))
    return out


def run_verify(only: str | None = None) -> list[VerifyFinding]:
    if only is not None and only not in SUITES:
        raise ValueError(f"unknown suite {only!r}; choose from {', '.join(SUITES)}")
    runners = {"hashes": hash_suite, "multipliers": multiplier_suite, "tables": table_suite}
    findings = []
    for name in SUITES:
        if only in (None, name):
            findings += runners[name]()
    return findings
