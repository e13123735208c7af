import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqcost.cost import (
    GateModelParams, TREND_METHODS, default_gate_model, fit_gate_model, method_cells,
    sweep_multiplier_trends,
)
from pqcost.multipliers import Method
from pqcost.profiles import bundled_profiles

MODEL = default_gate_model()


def calibration():
    seen = {}
    for p in bundled_profiles():
        for u in p.multiplier_units:
            if u.cost and not u.cost.estimated and u.combinational_cells:
                seen.setdefault((u.op1_bits, u.op2_bits), u)
    return list(seen.values())


def ols(xs, ys):
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    return slope, my - slope * mx


def test_fit_matches_closed_form_least_squares():
    units = calibration()
    assert len(units) == 11
    slope, intercept = ols([math.log(u.op1_bits + u.op2_bits) for u in units],
                           [math.log(u.combinational_cells) for u in units])
    assert MODEL.comb_exponent == pytest.approx(slope, rel=1e-12)
    assert MODEL.comb_coeff == pytest.approx(math.exp(intercept), rel=1e-12)


def test_fit_frozen_constants():
    assert MODEL.comb_coeff == pytest.approx(6.0076, abs=1e-4)
    assert MODEL.comb_exponent == pytest.approx(1.1830, abs=1e-4)
    assert MODEL.area_per_cell_um2 == pytest.approx(1.96448, abs=1e-5)
    assert MODEL.power_per_cell_uW == pytest.approx(0.23829, abs=1e-5)


def test_area_residuals_within_thirty_percent():
    assert len(MODEL.residuals) == 11
    worst = max(MODEL.residuals, key=lambda r: abs(r.area_error))
    assert all(abs(r.area_error) <= 0.30 for r in MODEL.residuals)
    assert worst.label.startswith("32x32") or "32" in worst.label


def test_sequential_cells_formula():
    assert MODEL.sequential_cells(4096, 4096) == 8192 + 13
    assert MODEL.sequential_cells(64, 16) == 80 + 7


def test_constants_must_be_positive():
    for name in ("flipflops_per_operand_bit", "comb_coeff", "area_per_cell_um2"):
        with pytest.raises(ValueError, match=name):
            GateModelParams(**{name: 0})


def test_fit_needs_two_units():
    with pytest.raises(ValueError):
        fit_gate_model(calibration()[:1])


@given(st.integers(1, 1 << 14), st.integers(1, 1 << 14))
def test_cells_monotone_in_width(m, n):
    assert MODEL.cells(m + 1, n) > MODEL.cells(m, n)
    assert MODEL.cells(m, n) == pytest.approx(MODEL.cells(n, m))


def test_method_cells_rejects_unmodelled_method():
    with pytest.raises(ValueError):
        method_cells(Method.NTT, 64, MODEL)


ROWS = sweep_multiplier_trends()


def series(attr):
    return {m.name: [getattr(r, attr) for r in ROWS if r.method == m.name] for m in TREND_METHODS}


def test_sweep_shape():
    assert len(ROWS) == 48
    assert [r.width_bits for r in ROWS[:12]] == [2 ** n for n in range(1, 13)]
    assert not any(r.extrapolated for r in ROWS)
    assert sweep_multiplier_trends(["SBM"], [13])[0].extrapolated


@pytest.mark.parametrize("attr", ["area_mm2", "power_mW"])
def test_gate_orderings(attr):
    s = series(attr)
    for i in range(12):
        assert s["SBM"][i] < s["KM2"][i] < s["TCM3"][i] < s["TCM4"][i]


@pytest.mark.parametrize("attr", ["cycles", "cells", "area_mm2", "power_mW"])
def test_series_monotone(attr):
    for name, ys in series(attr).items():
        assert all(a <= b for a, b in zip(ys, ys[1:])), name


def test_cycle_ordering_strict_from_eight_bits():
    s = series("cycles")
    for i in range(2, 12):
        assert s["SBM"][i] > s["KM2"][i] > s["TCM3"][i] > s["TCM4"][i]
    # widths 2 and 4 tie under the ceiling formulas
    assert s["KM2"][0] == s["TCM3"][0] == s["TCM4"][0] == 0
    assert s["KM2"][1] == s["TCM3"][1] == 1
