"""Edge and low-degree-vertex reductions, the 2-degenerate solver, and the
bipartite-plus-sparse decomposition solver.

Each reduction deletes one edge, rewrites the forbidden lists of its
endpoints so that any avoiding orientation of the smaller instance extends
to one of the original, and records a lift instruction saying how to orient
the deleted edge given the sub-solution.  Both rules keep the strict
half-degree bound intact, so they can be iterated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .balanced import orient_max_degree_two
from .errors import (
    BadDecompositionError,
    BoundViolatedError,
    InternalError,
    NonEmptyListAtLowDegreeError,
    NotTwoDegenerateError,
    PreconditionViolatedError,
    SubSolverFailedError,
)
from .graph import MultiGraph, Orientation, edge_subgraph
from .lists import ForbiddenLists, shift_down, strict_half_bound
from .oracle import decide, verify

EDGE_AB = "edge_ab"
LOW_DEG_FORCED = "low_degree_forced"
LOW_DEG_PIVOT = "low_degree_pivot"


@dataclass(frozen=True)
class ReductionStep:
    """How one deleted edge is re-oriented once the rest is solved.

    By default the edge points source -> target.  When pivot_vertex is set
    and its out-degree in the sub-solution equals pivot_value, the direction
    flips to target -> source so that the pivot vertex climbs out of the
    value that was dropped from its list.
    """

    rule: str
    edge: int
    source: int
    target: int
    pivot_vertex: int | None = None
    pivot_value: int | None = None

    def lift(self, out_degrees: Sequence[int]) -> tuple[int, int]:
        """(tail, head) for the deleted edge given sub-solution out-degrees."""
        if self.pivot_vertex is not None and out_degrees[self.pivot_vertex] == self.pivot_value:
            return self.target, self.source
        return self.source, self.target


@dataclass(frozen=True)
class ReducedInstance:
    """A smaller instance plus the map from its edge indices to the parent's."""

    graph: MultiGraph
    lists: ForbiddenLists
    edge_ids: tuple[int, ...]


def _drop_edge(graph: MultiGraph, eid: int) -> tuple[MultiGraph, tuple[int, ...]]:
    keep = [e for e in range(graph.m) if e != eid]
    sub, ids = edge_subgraph(graph, keep)
    return sub, ids


def edge_ab_reduce(
    graph: MultiGraph, lists: ForbiddenLists
) -> tuple[ReducedInstance, ReductionStep] | None:
    """Delete one edge between a degree-or-top marked vertex and a
    parity-or-zero marked vertex.

    An endpoint u qualifies on the receiving side when it has even degree
    or d(u) is in its list; the other endpoint v qualifies when it has even
    degree or 0 is in its list.  The edge is deleted, u drops d(u) from its
    list when present, v's list shifts down by one, and the lift orients the
    edge v -> u.  Requires the strict half bound; returns None when no edge
    qualifies.
    """
    if not strict_half_bound(graph, lists, allow_isolated_empty=True):
        raise BoundViolatedError("edge reduction needs |F(v)| < d(v)/2 everywhere")
    receiving = set()
    sending = set()
    for v in range(graph.n):
        even = graph.degree[v] % 2 == 0 and graph.degree[v] > 0
        if even or graph.degree[v] in lists[v]:
            receiving.add(v)
        if even or 0 in lists[v]:
            sending.add(v)
    for eid, (x, y) in enumerate(graph.edges):
        for u, v in ((x, y), (y, x)):
            if u in receiving and v in sending:
                new_lists = lists
                if graph.degree[u] in lists[u]:
                    new_lists = new_lists.replace(u, lists[u] - {graph.degree[u]})
                new_lists = new_lists.replace(v, shift_down(new_lists[v]))
                sub, ids = _drop_edge(graph, eid)
                if not strict_half_bound(sub, new_lists, allow_isolated_empty=True):
                    raise InternalError("edge reduction broke the strict half bound")
                step = ReductionStep(EDGE_AB, eid, source=v, target=u)
                return ReducedInstance(sub, new_lists, ids), step
    return None


def eliminate_low_degree(
    graph: MultiGraph, lists: ForbiddenLists, v0: int
) -> tuple[ReducedInstance, ReductionStep]:
    """Delete one edge at a degree-1-or-2 vertex whose list is empty.

    Branches on the other endpoint u: if d(u) is forbidden, drop it from the
    list and point the edge at u; if u's list is empty, just delete; else
    drop the largest forbidden value a (a+1 is never forbidden since d(u)
    is not) and let the lift point u -> v0 exactly when the sub-solution
    puts u at out-degree a.
    """
    d0 = graph.degree[v0]
    if d0 not in (1, 2):
        raise PreconditionViolatedError(f"vertex {v0} has degree {d0}, need 1 or 2")
    if lists[v0]:
        raise NonEmptyListAtLowDegreeError(
            f"vertex {v0} has forbidden values {sorted(lists[v0])}"
        )
    eid, u = min((e, w) for e, w in graph.incidence[v0])
    fu = lists[u]
    if graph.degree[u] in fu:
        new_lists = lists.replace(u, fu - {graph.degree[u]})
        step = ReductionStep(LOW_DEG_FORCED, eid, source=v0, target=u)
    elif not fu:
        new_lists = lists
        step = ReductionStep(LOW_DEG_FORCED, eid, source=v0, target=u)
    else:
        alpha = max(fu)
        # alpha + 1 is a legal value (alpha < d(u) since d(u) is not in F)
        # and unforbidden by maximality, so bumping u from alpha is safe.
        new_lists = lists.replace(u, fu - {alpha})
        step = ReductionStep(
            LOW_DEG_PIVOT, eid, source=v0, target=u, pivot_vertex=u, pivot_value=alpha
        )
    sub, ids = _drop_edge(graph, eid)
    return ReducedInstance(sub, new_lists, ids), step


def peel_order(graph: MultiGraph, max_degree: int = 2) -> list[int] | None:
    """Vertex elimination order witnessing degeneracy, or None.

    Repeatedly removes a vertex whose remaining degree is at most
    max_degree; returns None when some subgraph has minimum degree above it.
    """
    deg = list(graph.degree)
    removed = [False] * graph.n
    order = []
    for _ in range(graph.n):
        pick = -1
        for v in range(graph.n):
            if not removed[v] and deg[v] <= max_degree and (pick < 0 or deg[v] < deg[pick]):
                pick = v
        if pick < 0:
            return None
        removed[pick] = True
        order.append(pick)
        for eid, w in graph.incidence[pick]:
            if not removed[w]:
                deg[w] -= 1
    return order


def two_degenerate_solve(graph: MultiGraph, lists: ForbiddenLists) -> Orientation:
    """Complete solver for 2-degenerate graphs under the strict half bound.

    Repeatedly eliminates an edge at a minimum-degree vertex (always of
    degree at most 2, hence with an empty list), then replays the recorded
    lifts in reverse to orient every deleted edge.
    """
    lists.validate(graph)
    if peel_order(graph) is None:
        raise NotTwoDegenerateError("graph has a subgraph of minimum degree 3")
    if not strict_half_bound(graph, lists, allow_isolated_empty=True):
        raise BoundViolatedError("need |F(v)| < d(v)/2 at every non-isolated vertex")

    cur_graph, cur_lists = graph, lists
    cur_ids = tuple(range(graph.m))
    steps: list[ReductionStep] = []
    while cur_graph.m > 0:
        v0 = -1
        for v in range(cur_graph.n):
            if cur_graph.degree[v] > 0 and (v0 < 0 or cur_graph.degree[v] < cur_graph.degree[v0]):
                v0 = v
        if cur_graph.degree[v0] > 2:
            raise NotTwoDegenerateError("peeling reached minimum degree above 2")
        reduced, step = eliminate_low_degree(cur_graph, cur_lists, v0)
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

    toward = [True] * graph.m
    out = [0] * graph.n
    for step in reversed(steps):
        tail, head = step.lift(out)
        toward[step.edge] = graph.edges[step.edge][0] == tail
        out[tail] += 1
    result = Orientation(graph, toward)
    ok, violations = verify(graph, result, lists)
    if not ok:
        raise InternalError(f"lifted orientation violates the lists at {violations}")
    return result


def lift_steps(
    graph: MultiGraph, steps: Sequence[ReductionStep], inner: Orientation, edge_ids: Sequence[int]
) -> Orientation:
    """Extend a solution of a reduced instance back to the parent graph.

    inner orients the reduced graph whose edge j is parent edge edge_ids[j];
    steps are replayed newest-first, each consulting the out-degrees of the
    partial solution built so far.
    """
    toward = [True] * graph.m
    out = [0] * graph.n
    for j in range(len(edge_ids)):
        toward[edge_ids[j]] = inner.toward_v[j]
        out[inner.tail(j)] += 1
    for step in reversed(steps):
        tail, head = step.lift(out)
        toward[step.edge] = graph.edges[step.edge][0] == tail
        out[tail] += 1
    return Orientation(graph, toward)


def oracle_sub_solver(budget: int = 24) -> Callable[[MultiGraph, ForbiddenLists], Orientation | None]:
    """Sub-solver that decides the bipartite piece by exhaustive enumeration."""

    def solve_sub(graph: MultiGraph, lists: ForbiddenLists) -> Orientation | None:
        result = decide(graph, lists, budget=budget, early_stop=True)
        return result.witness

    return solve_sub


def _is_bipartite(graph: MultiGraph) -> bool:
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for _, w in graph.incidence[x]:
                if color[w] < 0:
                    color[w] = 1 - color[x]
                    stack.append(w)
                elif color[w] == color[x]:
                    return False
    return True


def decomposition_solve(
    graph: MultiGraph,
    lists: ForbiddenLists,
    bipartite_edges: Sequence[int],
    sparse_edges: Sequence[int],
    sub_solver: Callable[[MultiGraph, ForbiddenLists], Orientation | None] | None = None,
) -> Orientation:
    """Solve via a given split into a bipartite part and a max-degree-2 part.

    The sparse part is oriented with out-degrees in {0, 1}; lists of
    vertices that spent an out-degree unit there shift down by one, and the
    bipartite remainder goes to the sub-solver (exhaustive by default).
    Every vertex of sparse-degree 2 must have even total degree, the two
    edge sets must partition the edges, and the strict half bound must hold.
    """
    lists.validate(graph)
    bip = tuple(bipartite_edges)
    sparse = tuple(sparse_edges)
    if sorted(bip + sparse) != list(range(graph.m)):
        raise BadDecompositionError("edge sets do not partition the edge indices")
    if not strict_half_bound(graph, lists, allow_isolated_empty=True):
        raise BoundViolatedError("need |F(v)| < d(v)/2 at every non-isolated vertex")

    h_graph, h_ids = edge_subgraph(graph, sparse)
    if h_graph.max_degree() > 2:
        raise BadDecompositionError("sparse part has a vertex of degree above 2")
    for v in range(graph.n):
        if h_graph.degree[v] == 2 and graph.degree[v] % 2 == 1:
            raise BadDecompositionError(
                f"vertex {v} has sparse-degree 2 but odd total degree {graph.degree[v]}"
            )
    b_graph, b_ids = edge_subgraph(graph, bip)
    if not _is_bipartite(b_graph):
        raise BadDecompositionError("remainder after removing the sparse part is not bipartite")

    h_orient = orient_max_degree_two(h_graph)
    shifted = []
    for v in range(graph.n):
        vals = shift_down(lists[v]) if h_orient.out_degree(v) == 1 else lists[v]
        # values above the remaining degree are unreachable in the sub-instance
        shifted.append({x for x in vals if x <= b_graph.degree[v]})
    sub_lists = ForbiddenLists(shifted)

    solve_sub = sub_solver if sub_solver is not None else oracle_sub_solver()
    b_orient = solve_sub(b_graph, sub_lists)
    if b_orient is None:
        raise SubSolverFailedError("bipartite sub-solver found no avoiding orientation")

    toward = [True] * graph.m
    for j, eid in enumerate(h_ids):
        toward[eid] = h_orient.toward_v[j]
    for j, eid in enumerate(b_ids):
        toward[eid] = b_orient.toward_v[j]
    result = Orientation(graph, toward)
    ok, violations = verify(graph, result, lists)
    if not ok:
        raise InternalError(f"combined orientation violates the lists at {violations}")
    return result
