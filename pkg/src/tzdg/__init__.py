"""Total zero-divisor graphs of Z_m and finite products of Z_{p^k}."""

from .arith import FactoredModulus, factor
from .errors import DomainError, EmptyGraphError, ResourceError
from .graphs import (
    Graph,
    build_graph,
    build_total_graph,
    build_total_zero_divisor_graph,
    build_zero_divisor_graph,
    export_dot,
    export_json,
)
from .report import Budgets, InvariantReport, SweepConfig, analyze
from .ring import Ring

__version__ = "0.1.0"

__all__ = [
    "Budgets",
    "DomainError",
    "EmptyGraphError",
    "FactoredModulus",
    "Graph",
    "InvariantReport",
    "ResourceError",
    "Ring",
    "SweepConfig",
    "analyze",
    "build_graph",
    "build_total_graph",
    "build_total_zero_divisor_graph",
    "build_zero_divisor_graph",
    "export_dot",
    "export_json",
    "factor",
]
