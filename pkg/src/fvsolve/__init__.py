"""Exact feedback vertex set solving.

Two deterministic branch-and-reduce solvers for the disjoint compression
subproblem sit under an iterative-compression driver; an all-tents special
case reduces to matroid parity in the graphic matroid of a contracted
multigraph; and a branching-vector analyzer derives the solvers' runtime
exponent bases from the same rule table the fast solver executes.
"""

from .analysis import AlphaReport, BranchingVector, analyze, characteristic_root, sweep
from .graphio import ParseError, SimpleGraph, parse_graph
from .instance import (
    GuideInfo,
    Instance,
    InstanceMeasures,
    RootedView,
    classify,
    find_guide,
    measures,
)
from .multigraph import GraphError, Multigraph
from .oracle import brute_disjoint_fvs, brute_fvs, brute_parity
from .parity import (
    ParityInput,
    TentInstance,
    build_parity_input,
    graphic_matroid_parity,
    make_tent_instance,
    solve_tent_instance,
)
from .reductions import FAST, SIMPLE, reduce_fast, reduce_simple, reduce_to_fixpoint
from .solver import SolveOutcome, SolveStats, min_fvs, solve_disjoint, solve_fvs

__version__ = "0.1.0"

__all__ = [
    "AlphaReport", "BranchingVector", "FAST", "GraphError", "GuideInfo",
    "Instance", "InstanceMeasures", "Multigraph", "ParityInput", "ParseError",
    "RootedView", "SIMPLE", "SimpleGraph", "SolveOutcome", "SolveStats",
    "TentInstance", "analyze", "brute_disjoint_fvs", "brute_fvs",
    "brute_parity", "build_parity_input", "characteristic_root", "classify",
    "find_guide", "graphic_matroid_parity", "make_tent_instance", "measures",
    "min_fvs", "parse_graph", "reduce_fast", "reduce_simple",
    "reduce_to_fixpoint", "solve_disjoint", "solve_fvs", "solve_tent_instance",
    "sweep",
]
