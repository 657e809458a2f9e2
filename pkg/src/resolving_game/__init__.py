"""Exact engine for the Maker-Breaker resolving game on small graphs:
resolving sets and metric dimension, twin classes, pairing resolving sets,
optimal game values, per-family theorem checks, and a play service.
"""

from .graphs import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    GuardExceededError,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    is_connected,
    lexicographic_product_with_k2,
    load_graph,
    save_graph,
)
from .families import FamilySpec, bouquet_profile, family_catalog, g_k_structure, generate
from .resolving import (
    DimResult,
    code_vector,
    enumerate_metric_bases,
    is_resolving,
    metric_dimension,
)
from .twins import TwinPartition, spoiler_quick_win, twin_classes, twin_lower_bound
from .pairing import (
    PairingNotApplicableError,
    PairingSet,
    construct_family_pairing,
    find_dim_pairing,
    is_pairing_resolving,
)
from .solver import (
    GameState,
    GameValue,
    OutcomeRecord,
    Solver,
    best_move,
    outcome_record,
    resolver_cannot_win_within,
    solve,
    solve_with_skips,
    terminal_status,
)
from .trees import tree_basis_predicate, tree_outcome, tree_profile

__all__ = [
    "DisconnectedGraphError",
    "DistanceMatrix",
    "DimResult",
    "FamilySpec",
    "GameState",
    "GameValue",
    "Graph",
    "GraphError",
    "GuardExceededError",
    "OutcomeRecord",
    "PairingNotApplicableError",
    "PairingSet",
    "Solver",
    "TwinPartition",
    "all_pairs_distances",
    "best_move",
    "bouquet_profile",
    "build_graph",
    "cartesian_product",
    "code_vector",
    "construct_family_pairing",
    "enumerate_metric_bases",
    "family_catalog",
    "find_dim_pairing",
    "g_k_structure",
    "generate",
    "is_connected",
    "is_pairing_resolving",
    "is_resolving",
    "lexicographic_product_with_k2",
    "load_graph",
    "metric_dimension",
    "outcome_record",
    "resolver_cannot_win_within",
    "save_graph",
    "solve",
    "solve_with_skips",
    "spoiler_quick_win",
    "terminal_status",
    "tree_basis_predicate",
    "tree_outcome",
    "tree_profile",
    "twin_classes",
    "twin_lower_bound",
]
