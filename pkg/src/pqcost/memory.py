"""Logical memory instances and compiled ROM/RAM macro datasheet lookup.

Sizes use K = 1000 bytes: ``r = p * q / 8000`` Kbytes per instance and
``s = n * r`` for ``n`` instances.  Macro areas are ``W * H * n`` with W and H
in micrometres, reported in mm^2.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from .paths import data_dir


class MemoryKind(Enum):
    ROM = "ROM"
    RAM = "RAM"

    @classmethod
    def parse(cls, text: "str | MemoryKind") -> "MemoryKind":
        if isinstance(text, MemoryKind):
            return text
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"memory kind must be ROM or RAM, got {text!r}") from None


class StorageClass(Enum):
    ROM = "ROM"
    RAM = "RAM"
    FLIPFLOPS = "FLIPFLOPS"


COLUMN_MUX_CHOICES = {MemoryKind.RAM: (4, 8, 16), MemoryKind.ROM: (4, 8, 16, 32)}

BITS_PER_KBYTE = 8000


def instance_size_exact(p: int, q: int) -> Fraction:
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
    return Fraction(p * q, BITS_PER_KBYTE)


def instance_size_kbytes(p: int, q: int) -> float:
    """Size ``r`` of one p-address, q-bit instance in Kbytes (K = 1000)."""
    return float(instance_size_exact(p, q))


@dataclass(frozen=True)
class MemoryInstanceSpec:
    kind: MemoryKind
    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("n", "p", "q"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"memory instance field {name} must be an integer >= 1, got {value!r}")

    @property
    def r_kbytes(self) -> float:
        return instance_size_kbytes(self.p, self.q)

    @property
    def s_kbytes(self) -> float:
        return float(self.n * instance_size_exact(self.p, self.q))


def total_size_kbytes(instances: Iterable[MemoryInstanceSpec]) -> float:
    return float(sum((i.n * instance_size_exact(i.p, i.q) for i in instances), Fraction(0)))


@dataclass(frozen=True)
class CompiledMacro:
    """One datasheet row; ``dynamic_uWxF`` keeps the unit exactly as published."""

    kind: MemoryKind
    p: int
    q: int
    W_um: float
    H_um: float
    static_uW: float
    dynamic_uWxF: float
    column_mux: int = 8
    algorithm: str = ""
    n: int = 1
    printed_area_mm2: float | None = None

    def __post_init__(self) -> None:
        if self.W_um <= 0 or self.H_um <= 0:
            raise ValueError("macro dimensions must be positive")
        if self.column_mux not in COLUMN_MUX_CHOICES[self.kind]:
            raise ValueError(
                f"column mux {self.column_mux} is not offered for {self.kind.value} "
                f"(choices {COLUMN_MUX_CHOICES[self.kind]})"
            )

    @property
    def capacity_bits(self) -> int:
        return self.p * self.q


def macro_area_mm2(macro: CompiledMacro, n: int) -> float:
    if n < 1:
        raise ValueError("instance count n must be >= 1")
    return macro.W_um * macro.H_um * n / 1e6


class MissingMacroError(LookupError):
    pass


class Datasheet:
    """Bundled compiled-macro table with round-up lookup."""

    def __init__(self, macros: Iterable[CompiledMacro]):
        self.macros = tuple(macros)

    @classmethod
    def from_csv(cls, path: "str | Path") -> "Datasheet":
        macros = []
        with open(path, newline="") as fh:
            for row in csv.DictReader(fh):
                printed = row.get("total_area_mm2") or None
                macros.append(CompiledMacro(
                    kind=MemoryKind.parse(row["kind"]),
                    p=int(row["p"]),
                    q=int(row["q"]),
                    W_um=float(row["W_um"]),
                    H_um=float(row["H_um"]),
                    static_uW=float(row["static_uW"]),
                    dynamic_uWxF=float(row["dynamic_uWxF"]),
                    column_mux=int(row.get("column_mux") or 8),
                    algorithm=row["algorithm"],
                    n=int(row["n"]),
                    printed_area_mm2=float(printed) if printed else None,
                ))
        return cls(macros)

    def rows(self, kind: "MemoryKind | str | None" = None, algorithm: str | None = None) -> list[CompiledMacro]:
        k = MemoryKind.parse(kind) if kind is not None else None
        return [
            m for m in self.macros
            if (k is None or m.kind is k) and (algorithm is None or m.algorithm == algorithm)
        ]

    def lookup(self, kind: "MemoryKind | str", p: int, q: int, algorithm: str | None = None) -> CompiledMacro:
        """Smallest-capacity row with ``p' >= p`` and ``q' >= q``.

        With ``algorithm`` given, that algorithm's rows are searched first, so
        duplicate (p, q) entries resolve to the row published for it.
        Remaining ties go to the smaller footprint, then to table order.
        """
        k = MemoryKind.parse(kind)
        if p < 1 or q < 1:
            raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
        pools = [self.rows(k, algorithm), self.rows(k)] if algorithm else [self.rows(k)]
        for pool in pools:
            fits = [m for m in pool if m.p >= p and m.q >= q]
            if fits:
                return min(fits, key=lambda m: (m.capacity_bits, m.W_um * m.H_um))
        nearest = sorted(self.rows(k), key=lambda m: abs(m.capacity_bits - p * q))[:3]
        names = ", ".join(f"{m.p}x{m.q} ({m.algorithm})" for m in nearest)
        raise MissingMacroError(
            f"no {k.value} macro covers p={p}, q={q}; nearest rows: {names or 'none'}"
        )


@lru_cache(maxsize=None)
def _bundled(path: str) -> Datasheet:
    return Datasheet.from_csv(path)


def load_datasheet(path: "str | Path | None" = None) -> Datasheet:
    return _bundled(str(path or data_dir() / "datasheet.csv"))


def macro_lookup(
    kind: "MemoryKind | str",
    p: int,
    q: int,
    algorithm: str | None = None,
    datasheet: Datasheet | None = None,
) -> CompiledMacro:
    return (datasheet or load_datasheet()).lookup(kind, p, q, algorithm)


def classify_variable(descriptor: dict) -> StorageClass:
    """Storage class of a declared variable.

    Scalars and flags live in flip-flops; read-only arrays are ROM candidates
    and arrays with writes are RAM candidates.
    """
    count = descriptor.get("element_count", 1)
    bits = descriptor.get("element_bits", 1)
    if count < 1 or bits < 1:
        raise ValueError("element_count and element_bits must be >= 1")
    role = descriptor.get("role", "array")
    access = descriptor.get("access", "read_write")
    if role not in ("array", "scalar", "flag"):
        raise ValueError(f"unknown role {role!r}")
    if access not in ("read_only", "read_write"):
        raise ValueError(f"unknown access {access!r}")
    if role in ("scalar", "flag"):
        return StorageClass.FLIPFLOPS
    return StorageClass.ROM if access == "read_only" else StorageClass.RAM
