"""Design-point turbofan cycle analysis, exergy audit and optimization.

Thin Python wrapper over the C++ core. The main entry points are
``analyze`` (single design point), ``optimize`` (GA cycle optimization)
and ``topsis_rank`` (multi-criteria ranking).
"""

from ._core import (
    AmbientState,
    ConfigError,
    EngineSpec,
    FlightCondition,
    Fuel,
    InfeasibleCycleError,
    NotFoundError,
    PreconditionError,
    analyze,
    default_config_json,
    fuel_lookup,
    isa_ambient,
    ondesign_condition,
    optimize,
    snox,
    takeoff_condition,
    topsis_rank,
)

__all__ = [
    "AmbientState",
    "ConfigError",
    "EngineSpec",
    "FlightCondition",
    "Fuel",
    "InfeasibleCycleError",
    "NotFoundError",
    "PreconditionError",
    "analyze",
    "default_config_json",
    "fuel_lookup",
    "isa_ambient",
    "ondesign_condition",
    "optimize",
    "snox",
    "takeoff_condition",
    "topsis_rank",
]
