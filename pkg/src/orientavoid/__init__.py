"""Orientations of loopless multigraphs avoiding forbidden out-degrees.

The library decides and constructs orientations in which no vertex's
out-degree falls inside its per-vertex forbidden set: exact enumeration for
desk-scale ground truth, balanced and sink-or-high constructions, a
max-flow solver for single-interval bounds with violating-set certificates,
a lasso local search, edge/vertex reductions, and a dispatcher that routes
each instance to the strongest applicable method.
"""

from .balanced import (
    avoid_low_outdegrees,
    balanced_orientation,
    greedy_independent_set,
    orient_max_degree_two,
)
from .bounded import (
    DegreeBounds,
    ViolationCertificate,
    home_bounds,
    orient_bounded,
    single_home_solve,
)
from .graph import (
    DirectedPath,
    MultiGraph,
    Orientation,
    edge_subgraph,
    induced_subgraph,
    shortest_directed_path,
)
from .instances import Instance, emit_instance, load_instance, parse_instance, save_instance
from .lasso import (
    Lasso,
    LassoResult,
    Move,
    MoveTrace,
    find_lasso,
    flip_lasso,
    improve_step,
    lasso_solve,
)
from .lists import (
    ForbiddenLists,
    Interval,
    IntervalProfile,
    VertexClassification,
    classify,
    decompose,
    end_interval_holes,
    lasso_hypothesis,
    shift_down,
    single_home_hypothesis,
    strict_half_bound,
    weak_half_bound,
)
from .oracle import OracleResult, decide, verify
from .reductions import (
    ReducedInstance,
    ReductionStep,
    decomposition_solve,
    edge_ab_reduce,
    eliminate_low_degree,
    oracle_sub_solver,
    peel_order,
    two_degenerate_solve,
)
from .solver import GIVEUP, SAT, UNSAT, SolveReport, regular_solve, solve

__version__ = "0.1.0"

__all__ = [
    "DegreeBounds",
    "DirectedPath",
    "ForbiddenLists",
    "GIVEUP",
    "Instance",
    "Interval",
    "IntervalProfile",
    "Lasso",
    "LassoResult",
    "Move",
    "MoveTrace",
    "MultiGraph",
    "OracleResult",
    "Orientation",
    "ReducedInstance",
    "ReductionStep",
    "SAT",
    "SolveReport",
    "UNSAT",
    "VertexClassification",
    "ViolationCertificate",
    "avoid_low_outdegrees",
    "balanced_orientation",
    "classify",
    "decide",
    "decompose",
    "decomposition_solve",
    "edge_ab_reduce",
    "edge_subgraph",
    "eliminate_low_degree",
    "emit_instance",
    "end_interval_holes",
    "find_lasso",
    "flip_lasso",
    "greedy_independent_set",
    "home_bounds",
    "improve_step",
    "induced_subgraph",
    "lasso_hypothesis",
    "lasso_solve",
    "load_instance",
    "oracle_sub_solver",
    "orient_bounded",
    "orient_max_degree_two",
    "parse_instance",
    "peel_order",
    "regular_solve",
    "save_instance",
    "shift_down",
    "shortest_directed_path",
    "single_home_hypothesis",
    "single_home_solve",
    "solve",
    "strict_half_bound",
    "two_degenerate_solve",
    "verify",
    "weak_half_bound",
]
