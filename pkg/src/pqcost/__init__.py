"""Area, power and latency estimates for lattice-based PQC hardware building blocks."""

from .cost import (
    AreaSource,
    CostReport,
    GateModelParams,
    MemoryPowerInterpretation,
    Metric,
    aggregate_area,
    aggregate_power,
    compare_against_reference,
    estimate,
    fit_gate_model,
    latency_estimate,
    rank,
    sweep_multiplier_trends,
)
from .memory import MemoryInstanceSpec, MemoryKind, macro_area_mm2, macro_lookup
from .multipliers import Method, MultMode, multiply_cycles
from .operand import Operand, make_operand, random_operand
from .profiles import AlgorithmProfile, bundled_profiles, get_profile, load_profile, validate_profile

__version__ = "0.1.0"

__all__ = [
    "AlgorithmProfile", "AreaSource", "CostReport", "GateModelParams", "MemoryInstanceSpec", "MemoryKind",
    "MemoryPowerInterpretation", "Method", "Metric", "MultMode", "Operand", "aggregate_area",
    "aggregate_power", "bundled_profiles", "compare_against_reference", "estimate", "fit_gate_model",
    "get_profile", "latency_estimate", "load_profile", "macro_area_mm2", "macro_lookup", "make_operand",
    "multiply_cycles", "random_operand", "rank", "sweep_multiplier_trends", "validate_profile",
]
