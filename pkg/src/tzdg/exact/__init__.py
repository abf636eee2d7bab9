"""Definition-level oracles for graph invariants. Nothing here consults the predictors."""

from .coloring import (
    chromatic_index_exact,
    chromatic_number_exact,
    dsatur_coloring,
    find_clique_of_size,
    greedy_clique,
    line_graph,
)
from .iso import are_isomorphic, find_isomorphism, fingerprint
from .search import (
    HamiltonResult,
    MetricDimension,
    domination_number_exact,
    has_dominating_set_of_size,
    is_dominating,
    is_hamiltonian_exact,
    metric_dimension_exact,
    resolves,
    verify_hamiltonian_cycle,
)
from .structure import (
    ACYCLIC,
    INFINITE,
    UNDEFINED,
    Connectivity,
    ExactInvariants,
    are_twins,
    connectivity,
    diameter,
    distance_matrix,
    exact_invariants,
    girth,
    has_triangle,
    is_complete,
    is_eulerian,
    is_regular,
    twin_classes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
