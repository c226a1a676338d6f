"""copslab: pursuit-evasion on graphs without long induced paths.

A cop team that hunts along a growing induced path, an exact retrograde
game solver as ground truth, robber adversaries of graded strength, and a
CLI for corpus-scale verification and counterexample search.
"""

from .engine import GameTrace, Outcome, Side, StrategyError, play
from .generators import (
    complete_graph,
    connected_ptfree_graph,
    cycle_graph,
    generate,
    gnp_random_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .graphs import (
    Graph,
    GraphFormatError,
    closed_neighborhood,
    components_within,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    shortest_path_within,
)
from .gyarfas import GyarfasCop, NotPtFreeError, analyze_strategy
from .induced import is_pt_free, longest_induced_path_order, verify_induced_path
from .robbers import GreedyRobber, OptimalRobber, RandomRobber
from .solver import (
    OptimalCop,
    SolveResult,
    SolverBudgetError,
    SolverTable,
    cop_number,
    solve,
    verify_theorem_bound,
)

__all__ = [
    "Graph",
    "GraphFormatError",
    "GameTrace",
    "GreedyRobber",
    "GyarfasCop",
    "NotPtFreeError",
    "OptimalCop",
    "OptimalRobber",
    "Outcome",
    "RandomRobber",
    "Side",
    "SolveResult",
    "SolverBudgetError",
    "SolverTable",
    "StrategyError",
    "analyze_strategy",
    "closed_neighborhood",
    "complete_graph",
    "components_within",
    "connected_ptfree_graph",
    "cop_number",
    "cycle_graph",
    "encode_graph6",
    "format_edge_list",
    "generate",
    "gnp_random_graph",
    "is_pt_free",
    "longest_induced_path_order",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "play",
    "shortest_path_within",
    "solve",
    "star_graph",
    "verify_induced_path",
    "verify_theorem_bound",
]
