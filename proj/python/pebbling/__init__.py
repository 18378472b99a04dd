"""Graph pebbling workbench: exact pebbling numbers and weight-function bounds."""

from ._core import (
    CapExceededError,
    CoverageError,
    Graph,
    ParseError,
    PebblingError,
    bound,
    bound_graph,
    distance,
    eccentricity,
    families,
    generate_strategies,
    is_connected,
    is_solvable,
    max_unsolvable,
    path_partition,
    pi_graph,
    pi_rooted,
    pi_tree,
    ratio_bound_from,
    solve_lp,
    verify,
)

__all__ = [
    "CapExceededError",
    "CoverageError",
    "Graph",
    "ParseError",
    "PebblingError",
    "bound",
    "bound_graph",
    "distance",
    "eccentricity",
    "families",
    "generate_strategies",
    "is_connected",
    "is_solvable",
    "max_unsolvable",
    "path_partition",
    "pi_graph",
    "pi_rooted",
    "pi_tree",
    "ratio_bound_from",
    "solve_lp",
    "verify",
]
