"""Strategy dispatcher: route an instance to the strongest applicable method.

Solvers are tried in order of the strength of their guarantee: exact
polynomial constructions first, then the lasso local search where its
hypothesis holds, then heuristic restarts, and finally exhaustive
enumeration within a budget.  SAT answers always carry a verified
orientation; UNSAT answers are only ever backed by a full enumeration of
the original instance or by a violating-set certificate for lists that a
single degree interval captures exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .balanced import avoid_low_outdegrees, balanced_orientation
from .bounded import ViolationCertificate, home_bounds, orient_bounded, single_home_solve
from .errors import (
    DegreeTooSmallError,
    InternalError,
    NotRegularError,
    OutOfRangeForbiddenError,
)
from .graph import MultiGraph, Orientation
from .lasso import BALANCED, RANDOM, lasso_solve
from .lists import (
    ForbiddenLists,
    IntervalProfile,
    end_interval_holes,
    lasso_hypothesis,
    single_home_hypothesis,
    strict_half_bound,
)
from .oracle import decide, verify
from .reductions import (
    ReductionStep,
    decomposition_solve,
    edge_ab_reduce,
    lift_steps,
    peel_order,
    two_degenerate_solve,
)

SAT = "SAT"
UNSAT = "UNSAT"
GIVEUP = "GIVEUP"

# guarantee provenance for a report
GUARANTEED = "guaranteed"  # method is proven complete for this instance class
EXTERNAL = "external"  # existence cited from prior work; method may be heuristic
HEURISTIC = "heuristic"  # no a-priori guarantee; the result is still verified
EXHAUSTIVE = "exhaustive"  # decided by full enumeration

DEFAULT_ORACLE_BUDGET = 24
DEFAULT_RESTARTS = 20
REGULAR_RESTARTS = 50


@dataclass
class SolveReport:
    status: str
    orientation: Orientation | None = None
    certificate: ViolationCertificate | None = None
    methods: list[str] = field(default_factory=list)
    guarantee: str | None = None
    stats: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "schema": 1,
            "status": self.status,
            "methods": self.methods,
            "guarantee": self.guarantee,
            "stats": self.stats,
        }
        if self.orientation is not None:
            g = self.orientation.graph
            out["orientation"] = [
                [self.orientation.tail(e), self.orientation.head(e)] for e in range(g.m)
            ]
        else:
            out["orientation"] = None
        if self.certificate is not None:
            out["certificate"] = {
                "kind": self.certificate.kind,
                "vertices": sorted(self.certificate.vertices),
                "bound_sum": self.certificate.bound_sum,
                "inside_edges": self.certificate.inside_edges,
                "boundary_edges": self.certificate.boundary_edges,
            }
        else:
            out["certificate"] = None
        return out


def _checked_sat(
    graph: MultiGraph,
    lists: ForbiddenLists,
    orientation: Orientation,
    methods: list[str],
    guarantee: str,
    stats: dict,
) -> SolveReport:
    ok, violations = verify(graph, orientation, lists)
    if not ok:
        raise InternalError(f"method chain {methods} produced violations {violations}")
    return SolveReport(SAT, orientation, None, methods, guarantee, stats)


def regular_solve(
    graph: MultiGraph,
    forbidden: Sequence[int] | frozenset[int],
    seed: int = 0,
    restarts: int = REGULAR_RESTARTS,
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
) -> SolveReport:
    """Solve a d-regular graph, d >= 5, with one common list of size <= 2.

    Case analysis: if the list misses both middle values floor(d/2) and
    ceil(d/2), a balanced orientation already avoids it.  A consecutive
    pair straddling the middle goes to the lasso search, except the two
    5-regular corners {1,2} and {3,4}, which use the sink-or-high
    construction (reversed for {3,4}).  Everything else hitting the middle
    goes to the lasso search when its hypothesis holds, and otherwise to
    restarts plus enumeration; existence there is known from prior work on
    single-value holes, so failures are reported as GIVEUP, never UNSAT.
    """
    d = graph.regular_degree()
    if d is None:
        raise NotRegularError("regular_solve needs a regular graph")
    if d < 5:
        raise DegreeTooSmallError(f"regular_solve needs degree >= 5, got {d}")
    fset = frozenset(forbidden)
    if len(fset) > 2:
        raise OutOfRangeForbiddenError(f"common list must have size <= 2, got {len(fset)}")
    lists = ForbiddenLists.uniform(graph.n, fset)
    lists.validate(graph)
    stats: dict = {}

    middle = {d // 2, (d + 1) // 2}
    if not (fset & middle):
        return _checked_sat(
            graph, lists, balanced_orientation(graph), ["balanced"], GUARANTEED, stats
        )

    x = min(fset)
    if len(fset) == 2 and fset == {x, x + 1}:
        if x == d // 2 or (x == d // 2 - 1 and d >= 6) or (x == (d + 1) // 2 and d >= 7):
            result = lasso_solve(graph, lists)
            if not result.ok:
                raise InternalError("lasso search failed on a guaranteed regular case")
            stats["moves"] = result.moves
            return _checked_sat(graph, lists, result.orientation, ["lasso"], GUARANTEED, stats)
        if x == d // 2 - 1:  # d == 5, F == {1, 2}
            orientation = avoid_low_outdegrees(graph, k=2)
            return _checked_sat(graph, lists, orientation, ["extreme"], GUARANTEED, stats)
        if x == (d + 1) // 2:  # d == 5, F == {3, 4}
            orientation = avoid_low_outdegrees(graph, k=2).reverse_all()
            return _checked_sat(
                graph, lists, orientation, ["extreme", "reverse_all"], GUARANTEED, stats
            )
        raise InternalError(f"consecutive pair {sorted(fset)} fell through the case split")

    # single middle value or a non-consecutive pair
    profile = IntervalProfile(graph, lists)
    if lasso_hypothesis(profile):
        result = lasso_solve(graph, lists, profile=profile)
        if not result.ok:
            raise InternalError("lasso search failed despite its hypothesis holding")
        stats["moves"] = result.moves
        return _checked_sat(graph, lists, result.orientation, ["lasso"], GUARANTEED, stats)

    report = _heuristic_then_oracle(
        graph, lists, profile, restarts, seed, oracle_budget, stats
    )
    if report.status == SAT:
        report.guarantee = EXTERNAL if "heuristic_lasso" in report.methods else report.guarantee
        return report
    if report.status == UNSAT:
        raise InternalError("regular instance with |F| <= 2 reported UNSAT")
    return report


def _heuristic_then_oracle(
    graph: MultiGraph,
    lists: ForbiddenLists,
    profile: IntervalProfile,
    restarts: int,
    seed: int,
    oracle_budget: int,
    stats: dict,
) -> SolveReport:
    """Lasso restarts, then exhaustive enumeration within the budget."""
    attempts = 0
    for r in range(restarts + 1):
        initial = BALANCED if r == 0 else RANDOM
        result = lasso_solve(graph, lists, initial=initial, seed=seed + r, profile=profile)
        attempts += 1
        if result.ok:
            stats["moves"] = result.moves
            stats["restarts_used"] = attempts
            return _checked_sat(
                graph, lists, result.orientation, ["heuristic_lasso"], HEURISTIC, stats
            )
    stats["restarts_used"] = attempts
    if graph.m <= oracle_budget:
        oracle = decide(graph, lists, budget=oracle_budget)
        stats["oracle_states"] = oracle.enumerated_count
        if oracle.status == "SAT":
            return _checked_sat(graph, lists, oracle.witness, ["oracle"], EXHAUSTIVE, stats)
        return SolveReport(UNSAT, None, None, ["oracle"], EXHAUSTIVE, stats)
    return SolveReport(GIVEUP, None, None, ["heuristic_lasso"], None, stats)


def _certified_route(
    graph: MultiGraph,
    lists: ForbiddenLists,
    stats: dict,
    seed: int,
    restarts: int,
    oracle_budget: int,
    decomposition: tuple[Sequence[int], Sequence[int]] | None,
) -> SolveReport | None:
    """Try the methods with a proven or cited guarantee, in priority order."""
    profile = IntervalProfile(graph, lists)
    if single_home_hypothesis(profile):
        orientation = single_home_solve(graph, lists)
        return _checked_sat(graph, lists, orientation, ["single_home"], GUARANTEED, stats)
    if strict_half_bound(graph, lists, allow_isolated_empty=True) and peel_order(graph) is not None:
        orientation = two_degenerate_solve(graph, lists)
        return _checked_sat(graph, lists, orientation, ["two_degenerate"], GUARANTEED, stats)
    d = graph.regular_degree()
    common = lists.uniform_values()
    if d is not None and d >= 5 and common is not None and len(common) <= 2:
        report = regular_solve(graph, common, seed=seed, restarts=restarts,
                               oracle_budget=oracle_budget)
        if report.status == SAT:
            report.stats.update(stats)
            return report
    if lasso_hypothesis(profile):
        result = lasso_solve(graph, lists, profile=profile)
        if result.ok:
            stats["moves"] = result.moves
            return _checked_sat(graph, lists, result.orientation, ["lasso"], GUARANTEED, stats)
        raise InternalError("lasso search failed despite its hypothesis holding")
    if decomposition is not None:
        bip, sparse = decomposition
        orientation = decomposition_solve(graph, lists, bip, sparse)
        return _checked_sat(graph, lists, orientation, ["decomposition"], EXTERNAL, stats)
    return None


def solve(
    graph: MultiGraph,
    lists: ForbiddenLists,
    decomposition: tuple[Sequence[int], Sequence[int]] | None = None,
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> SolveReport:
    """Full pipeline for an arbitrary instance.

    Trivial outcomes first (all lists empty; some vertex with every value
    forbidden).  Then the certified routes on the instance as given; then
    iterated edge reductions followed by the certified routes and heuristic
    restarts on the reduced instance, lifting any solution back.  Undecided
    instances fall back to exact methods on the original instance: the
    bounded-orientation solver when every list is a single degree interval
    (its certificate proves UNSAT), else full enumeration within the budget,
    else GIVEUP.
    """
    lists.validate(graph)
    stats: dict = {}

    if lists.all_empty():
        return SolveReport(
            SAT, Orientation.all_forward(graph), None, ["trivial"], GUARANTEED, stats
        )
    for v in range(graph.n):
        if len(lists[v]) == graph.degree[v] + 1:
            stats["blocked_vertex"] = v
            return SolveReport(UNSAT, None, None, ["trivial"], GUARANTEED, stats)

    report = _certified_route(
        graph, lists, stats, seed, restarts, oracle_budget, decomposition
    )
    if report is not None:
        return report

    # iterated edge reductions, then retry the certified routes on the result
    steps: list[ReductionStep] = []
    cur_graph, cur_lists = graph, lists
    cur_ids = tuple(range(graph.m))
    while strict_half_bound(cur_graph, cur_lists, allow_isolated_empty=True):
        reduction = edge_ab_reduce(cur_graph, cur_lists)
        if reduction is None:
            break
        reduced, step = reduction
        steps.append(
            ReductionStep(
                step.rule,
                cur_ids[step.edge],
                step.source,
                step.target,
                step.pivot_vertex,
                step.pivot_value,
            )
        )
        cur_graph, cur_lists = reduced.graph, reduced.lists
        cur_ids = tuple(cur_ids[j] for j in reduced.edge_ids)

    if steps:
        stats["reduction_steps"] = len(steps)
        inner = _certified_route(
            cur_graph, cur_lists, dict(stats), seed, restarts, oracle_budget, None
        )
        if inner is not None and inner.status == SAT:
            lifted = lift_steps(graph, steps, inner.orientation, cur_ids)
            inner.stats["reduction_steps"] = len(steps)
            return _checked_sat(
                graph, lists, lifted, ["edge_reduce"] + inner.methods, inner.guarantee,
                inner.stats,
            )

    # heuristic restarts on the (possibly reduced) instance
    cur_profile = IntervalProfile(cur_graph, cur_lists)
    attempts = 0
    for r in range(restarts + 1):
        initial = BALANCED if r == 0 else RANDOM
        result = lasso_solve(cur_graph, cur_lists, initial=initial, seed=seed + r,
                             profile=cur_profile)
        attempts += 1
        if result.ok:
            stats["moves"] = result.moves
            stats["restarts_used"] = attempts
            methods = (["edge_reduce"] if steps else []) + ["heuristic_lasso"]
            lifted = lift_steps(graph, steps, result.orientation, cur_ids)
            return _checked_sat(graph, lists, lifted, methods, HEURISTIC, stats)
    stats["restarts_used"] = attempts

    # exact fallbacks on the original instance; reductions are only proven
    # sound in the lifting direction, so UNSAT must be decided here
    profile = IntervalProfile(graph, lists)
    if end_interval_holes(profile):
        result = orient_bounded(graph, home_bounds(profile))
        if isinstance(result, ViolationCertificate):
            return SolveReport(UNSAT, None, result, ["bounded_decide"], GUARANTEED, stats)
        return _checked_sat(graph, lists, result, ["bounded_decide"], GUARANTEED, stats)
    if graph.m <= oracle_budget:
        oracle = decide(graph, lists, budget=oracle_budget)
        stats["oracle_states"] = oracle.enumerated_count
        if oracle.status == "SAT":
            return _checked_sat(graph, lists, oracle.witness, ["oracle"], EXHAUSTIVE, stats)
        return SolveReport(UNSAT, None, None, ["oracle"], EXHAUSTIVE, stats)
    return SolveReport(GIVEUP, None, None, ["giveup"], None, stats)
