"""Finite-difference differentiation benchmarks.

Thin re-export of the compiled extension; see the C++ headers for the
authoritative documentation of each operation.
"""

from ._fdbench import (  # noqa: F401
    ConvergenceResult,
    CostProfile,
    FdbenchError,
    LogisticModel,
    MarketModel,
    Stencil,
    TemperatureModel,
    builtin_stencil,
    case_error_table,
    cost_profile,
    differentiate_series,
    error_variants,
    estimate,
    generate_stencil,
    geometric_grid,
    observed_order,
    preset_names,
    sample_case,
    scheme_names,
    series_to_csv,
)

__all__ = [
    "ConvergenceResult",
    "CostProfile",
    "FdbenchError",
    "LogisticModel",
    "MarketModel",
    "Stencil",
    "TemperatureModel",
    "builtin_stencil",
    "case_error_table",
    "cost_profile",
    "differentiate_series",
    "error_variants",
    "estimate",
    "generate_stencil",
    "geometric_grid",
    "observed_order",
    "preset_names",
    "sample_case",
    "scheme_names",
    "series_to_csv",
]
