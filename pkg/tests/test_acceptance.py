"""Acceptance gate: one PASS/FAIL line per criterion, each at its stated tolerance."""

import csv
import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from oracles import negacyclic_convolution, xor_shift_add
from pqcost.cost import (
    MemoryPowerInterpretation, Metric, TREND_METHODS, aggregate_area, aggregate_power, chart_reports,
    estimate_all, rank, reproduce_reference_deltas, sweep_multiplier_trends,
)
from pqcost.errata import KNOWN_SIZE_ERRATA, find_errata
from pqcost.hashes.vectors import VECTOR_FILES, run_vector_suite
from pqcost.multipliers import (
    ENGINES, Method, MultMode, multiply_cycles, segmented_sbm_multiply, unified_multiply_reduce,
)
from pqcost.ntt import find_ntt_params, ntt_forward, ntt_inverse, ntt_polynomial_multiply
from pqcost.operand import random_operand
from pqcost.paths import data_dir
from pqcost.profiles import get_profile


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number}] {status}: {title}")
            for f in failures:
                print(f"    - {f}")
        assert not failures, "; ".join(failures)
    return emit


def test_criterion_1_hash_conformance(verdict):
    start = time.perf_counter()
    reports = run_vector_suite(data_dir() / "vectors")
    elapsed = time.perf_counter() - start
    failures = [f"{r.path}: {r.errors + r.failures}" for r in reports if not r.ok]
    if set(VECTOR_FILES) != {r.path.split("/")[-1] for r in reports}:
        failures.append("vector file set incomplete")
    if sum(r.total for r in reports) == 0:
        failures.append("no vectors evaluated")
    if elapsed >= 10:
        failures.append(f"runtime {elapsed:.1f} s >= 10 s")
    verdict(1, f"{len(reports)} vector files, {sum(r.total for r in reports)} vectors, {elapsed:.2f} s", failures)


def test_criterion_2_multiplier_oracles(verdict):
    start = time.perf_counter()
    failures = []
    engines = dict(ENGINES)
    engines["SEGMENTED"] = lambda a, b, mode: segmented_sbm_multiply(a, b, 8, mode)
    for width in (8, 64, 1024, 4096):
        for i in range(100):
            a = random_operand(width, 2 * i + width * 1000)
            b = random_operand(width, 2 * i + 1 + width * 1000)
            want = {MultMode.INTEGER: a.value * b.value, MultMode.CARRYLESS: xor_shift_add(a.value, b.value)}
            for name, engine in engines.items():
                for mode, expected in want.items():
                    if engine(a, b, mode).product.value != expected:
                        failures.append(f"{name} {mode.value} width {width} pair {i}")
    elapsed = time.perf_counter() - start
    if len(engines) != 5:
        failures.append(f"{len(engines)} engines, expected 5")
    if elapsed >= 120:
        failures.append(f"runtime {elapsed:.1f} s >= 120 s")
    verdict(2, f"5 engines x 2 modes x 4 widths x 100 pairs, {len(failures)} mismatches, {elapsed:.1f} s", failures)


def test_criterion_3_cycle_formulas(verdict):
    cases = [(Method.SBM, 4096, 4095), (Method.KM2, 4096, 2047), (Method.TCM4, 4096, 1023),
             (Method.MONTGOMERY, 32, 63)]
    failures = [f"{m.name}({w}) = {multiply_cycles(m, w)}, expected {c}" for m, w, c in cases
                if multiply_cycles(m, w) != c]
    _, unified = unified_multiply_reduce(random_operand(4096, 1), random_operand(4096, 2))
    if unified != 8190:
        failures.append(f"unified(4096) = {unified}, expected 8190")
    verdict(3, "published cycle examples, tolerance 0", failures)


def test_criterion_4_ntt(verdict):
    failures = []
    p4 = find_ntt_params(4, 17)
    # Every a against each basis monomial and a dense b; with bilinearity this spans all pairs.
    for b in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [3, 14, 0, 9]):
        b_hat = ntt_forward(b, p4)
        for a in itertools.product(range(17), repeat=4):
            a = list(a)
            got = ntt_inverse([x * y % 17 for x, y in zip(ntt_forward(a, p4), b_hat)], p4)
            if got != negacyclic_convolution(a, b, 17):
                failures.append(f"n=4 a={a} b={b}")
            if ntt_inverse(ntt_forward(a, p4), p4) != a:
                failures.append(f"n=4 round trip {a}")
    for n, q in ((8, 17), (256, 7681)):
        params = find_ntt_params(n, q)
        rng = random.Random(f"acceptance-ntt-{n}")
        for _ in range(100):
            a = [rng.randrange(q) for _ in range(n)]
            b = [rng.randrange(q) for _ in range(n)]
            if ntt_polynomial_multiply(a, b, params)[0] != negacyclic_convolution(a, b, q):
                failures.append(f"n={n} product mismatch")
            if ntt_inverse(ntt_forward(a, params), params) != a:
                failures.append(f"n={n} round trip")
    verdict(4, "NTT products against negacyclic convolution, n = 4, 8, 256", failures[:10])


def test_criterion_5_table_reproduction(verdict):
    failures = []
    for path in sorted((data_dir() / "profiles").glob("*.json")):
        doc = json.loads(path.read_text())
        for kind in ("rom", "ram"):
            total = Fraction(0)
            for inst in doc[kind]["instances"]:
                r = Fraction(inst["p"] * inst["q"], 8000)
                total += inst["n"] * r
                flagged = (doc["name"], kind.upper(), inst["p"], inst["q"]) in KNOWN_SIZE_ERRATA
                for label, printed, value in (("r", inst.get("r_printed"), r),
                                              ("s", inst.get("s_printed"), inst["n"] * r)):
                    if printed is not None and printed != float(value) and not flagged:
                        failures.append(f"{doc['name']} {kind.upper()} {inst['p']}x{inst['q']} {label}: "
                                        f"printed {printed}, recomputed {float(value)}")
            printed = doc[kind].get("total_printed")
            has_flag = any((doc["name"], kind.upper(), i["p"], i["q"]) in KNOWN_SIZE_ERRATA
                           for i in doc[kind]["instances"])
            if printed is not None and printed != float(total) and not has_flag:
                failures.append(f"{doc['name']} {kind.upper()} Total_size: printed {printed}, "
                                f"recomputed {float(total)}")
    errata = find_errata()
    for algorithm, kind, p, q in KNOWN_SIZE_ERRATA:
        if not any((e.algorithm, e.kind, e.p, e.q) == (algorithm, kind, p, q) and e.quantity != "area_mm2"
                   for e in errata):
            failures.append(f"flagged row {algorithm} {kind} {p}x{q} missing from errata report")
    with open(data_dir() / "datasheet.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            area = float(row["W_um"]) * float(row["H_um"]) * int(row["n"]) / 1e6
            if f"{area:.4f}" != f"{float(row['total_area_mm2']):.4f}":
                failures.append(f"{row['algorithm']} {row['kind']} {row['n']}x({row['p']}x{row['q']}) area: "
                                f"printed {row['total_area_mm2']}, W*H*n {area:.4f}")
    verdict(5, "memory sizes and macro areas against printed tables", failures)


def test_criterion_6_aggregation(verdict):
    failures = []
    kyber, three, saber = (get_profile(k) for k in ("kyber1024-90s", "papabearephem", "firesaber"))
    hash_dyn = aggregate_power(kyber)[0].hash
    if abs(hash_dyn - 59.015) > 0.01:
        failures.append(f"KYBER hash dynamic {hash_dyn:.4f} mW")
    if not aggregate_area(three).total < 0.5:
        failures.append(f"ThreeBears area {aggregate_area(three).total:.4f}")
    for p in (kyber, saber):
        if not 0.5 < aggregate_area(p).total < 1.0:
            failures.append(f"{p.name} area {aggregate_area(p).total:.4f}")
    dyn = aggregate_power(three, interpretation=MemoryPowerInterpretation.AT_REPORT_FREQUENCY)[0].total
    if abs(dyn / 79.92 - 1) > 0.05:
        failures.append(f"ThreeBears dynamic {dyn:.3f} mW")
    for d in reproduce_reference_deltas():
        for quantity, got, printed in (("area", d.area_delta_pct, d.printed_area_delta_pct),
                                       ("power", d.power_delta_pct, d.printed_power_delta_pct)):
            if printed is not None and got != printed:
                exact = d.area_delta_exact if quantity == "area" else d.power_delta_exact
                failures.append(f"{d.algorithm} {d.variant or ''} {quantity} delta {got}% "
                                f"(exact {exact:.2f}), printed {printed}%".replace("  ", " "))
    verdict(6, "subtotals, area ranges, ThreeBears power, reference deltas", failures)


def test_criterion_7_trends(verdict):
    rows = sweep_multiplier_trends(TREND_METHODS, range(1, 13))
    by = {m.name: [r for r in rows if r.method == m.name] for m in TREND_METHODS}
    failures = []
    for i in range(12):
        w = 2 ** (i + 1)
        c = [by[m.name][i].cycles for m in TREND_METHODS]
        if not c[0] > c[1] > c[2] > c[3]:
            failures.append(f"cycles at 2^{i + 1} = {w}: SBM {c[0]}, KM2 {c[1]}, TCM3 {c[2]}, TCM4 {c[3]}")
        for attr in ("area_mm2", "power_mW"):
            v = [getattr(by[m.name][i], attr) for m in TREND_METHODS]
            if min(v) != v[0] or max(v) != v[3]:
                failures.append(f"{attr} ordering at {w}")
    for name, series in by.items():
        for attr in ("cycles", "area_mm2", "power_mW"):
            ys = [getattr(r, attr) for r in series]
            if any(a > b for a, b in zip(ys, ys[1:])):
                failures.append(f"{name} {attr} not monotone")
    verdict(7, "cycle, area and power trends over 2^1..2^12", failures)


def test_criterion_8_ranking(verdict):
    reports = estimate_all()
    failures = []
    for metric in (Metric.AREA, Metric.POWER):
        first = rank(reports, metric)[0].algorithm
        if first != "ThreeBears":
            failures.append(f"{metric.value} ranking starts with {first}")
    frodo = next(r for r in reports if r.algorithm == "FrodoKEM")
    if not frodo.flags or frodo in chart_reports(reports):
        failures.append("FrodoKEM not flagged or still charted")
    verdict(8, "ThreeBears first by area and power; FrodoKEM excluded from charts", failures)


def test_criterion_9_determinism(verdict):
    cmd = [sys.executable, "-m", "pqcost", "report", "--format", "json"]
    first, second = (subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2))
    failures = [] if first == second and first else ["report output differs between runs"]
    verdict(9, f"two report runs, {len(first)} bytes each", failures)
