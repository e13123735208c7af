"""Printed-versus-recomputed discrepancies in the bundled tables.

Two sources are checked: memory sizes carried by the profiles (r, s and the
per-kind total) and macro areas in the datasheet (W x H x n at 4 decimals).
"""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable

from .memory import Datasheet, load_datasheet, macro_area_mm2
from .paths import data_dir
from .profiles import AlgorithmProfile, bundled_profiles, validate_profile

# Rows whose printed sizes are already known to be inconsistent.
KNOWN_SIZE_ERRATA = {("qTesla", "RAM", 10240, 32), ("LAC", "RAM", 1024, 8)}


@dataclass(frozen=True)
class Erratum:
    algorithm: str
    kind: str
    quantity: str  # r_kbytes, s_kbytes, total_kbytes or area_mm2
    n: int | None
    p: int | None
    q: int | None
    printed: float
    recomputed: float
    known: bool


COLUMNS = tuple(f.name for f in fields(Erratum))


def size_errata(profiles: Iterable[AlgorithmProfile]) -> list[Erratum]:
    out = []
    for profile in profiles:
        for f in validate_profile(profile):
            if f.severity != "erratum":
                continue
            section, _, rest = f.path.partition(".")
            sec = profile.rom if section == "rom" else profile.ram
            kind = sec.kind.value
            if rest == "total":
                # A total that is off only because of a known row inherits that status.
                known = any((profile.name, kind, r.spec.p, r.spec.q) in KNOWN_SIZE_ERRATA for r in sec.records)
                out.append(Erratum(profile.name, kind, "total_kbytes", None, None, None,
                                   f.printed, f.recomputed, known))
                continue
            index = int(rest.split("[")[1].split("]")[0])
            spec = sec.records[index].spec
            quantity = "r_kbytes" if rest.endswith(".r") else "s_kbytes"
            known = (profile.name, kind, spec.p, spec.q) in KNOWN_SIZE_ERRATA
            out.append(Erratum(profile.name, kind, quantity, spec.n, spec.p, spec.q,
                               f.printed, f.recomputed, known))
    return out


def area_errata(datasheet: Datasheet) -> list[Erratum]:
    out = []
    for m in datasheet.macros:
        if m.printed_area_mm2 is None:
            continue
        recomputed = round(macro_area_mm2(m, m.n), 4)
        if recomputed != m.printed_area_mm2:
            out.append(Erratum(m.algorithm, m.kind.value, "area_mm2", m.n, m.p, m.q,
                               m.printed_area_mm2, recomputed, False))
    return out


def find_errata(profiles: Iterable[AlgorithmProfile] | None = None,
                datasheet: Datasheet | None = None) -> list[Erratum]:
    rows = size_errata(bundled_profiles() if profiles is None else profiles)
    rows += area_errata(datasheet or load_datasheet())
    return sorted(rows, key=lambda e: (e.quantity == "area_mm2", e.algorithm, e.kind, e.quantity,
                                       e.p or 0, e.q or 0))


def errata_csv(rows: Iterable[Erratum]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for e in rows:
        writer.writerow(["" if v is None else ("yes" if v is True else "no" if v is False else v)
                         for v in astuple(e)])
    return buf.getvalue()


def bundled_errata_path() -> Path:
    return data_dir() / "errata.csv"


def load_errata(path: "str | Path | None" = None) -> list[Erratum]:
    out = []
    with open(path or bundled_errata_path(), newline="") as fh:
        for r in csv.DictReader(fh):
            opt = lambda k: int(r[k]) if r[k] else None  # noqa: E731
            out.append(Erratum(r["algorithm"], r["kind"], r["quantity"], opt("n"), opt("p"), opt("q"),
                               float(r["printed"]), float(r["recomputed"]), r["known"] == "yes"))
    return out
