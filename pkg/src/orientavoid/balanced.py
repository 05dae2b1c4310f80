"""Balanced orientations and the sink-or-high orientation of odd-regular graphs.

Balancing uses the classic dummy-vertex trick: join a fresh vertex to every
odd-degree vertex, decompose the now-Eulerian multigraph into closed trails
with Hierholzer's algorithm, and orient each trail consistently.  Restricted
to the original edges this leaves |out - in| <= 1 everywhere, with equality
to zero at even-degree vertices.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import DegreeTooHighError, InternalError, NotRegularError
from .graph import MultiGraph, Orientation, induced_subgraph


def balanced_orientation(graph: MultiGraph) -> Orientation:
    """Orientation with |d+(v) - d-(v)| <= 1 everywhere, = 0 at even degree."""
    n = graph.n
    aug_edges = list(graph.edges)
    odd = [v for v in range(n) if graph.degree[v] % 2 == 1]
    dummy = n
    for v in odd:
        aug_edges.append((v, dummy))

    n_aug = n + (1 if odd else 0)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_aug)]
    for eid, (a, b) in enumerate(aug_edges):
        adj[a].append((eid, b))
        adj[b].append((eid, a))

    used = [False] * len(aug_edges)
    ptr = [0] * n_aug
    toward = [True] * graph.m

    for start in range(n_aug):
        if ptr[start] >= len(adj[start]):
            continue
        stack = [start]
        while stack:
            x = stack[-1]
            advanced = False
            while ptr[x] < len(adj[x]):
                eid, y = adj[x][ptr[x]]
                ptr[x] += 1
                if used[eid]:
                    continue
                used[eid] = True
                if eid < graph.m:
                    # orient in traversal direction x -> y
                    toward[eid] = aug_edges[eid][0] == x
                stack.append(y)
                advanced = True
                break
            if not advanced:
                stack.pop()

    result = Orientation(graph, toward)
    for v in range(n):
        bal = result.imbalance(v)
        if abs(bal) > 1 or (graph.degree[v] % 2 == 0 and bal != 0):
            raise InternalError(f"balanced orientation left imbalance {bal} at vertex {v}")
    return result


def orient_max_degree_two(graph: MultiGraph) -> Orientation:
    """Orient a graph of maximum degree <= 2 with every out-degree in {0, 1}.

    Cycles get a consistent direction; paths are balanced via the dummy
    vertex, which caps their out-degrees at 1 as well.
    """
    if graph.max_degree() > 2:
        raise DegreeTooHighError(f"maximum degree {graph.max_degree()} exceeds 2")
    result = balanced_orientation(graph)
    if any(result.out_degree(v) > 1 for v in range(graph.n)):
        raise InternalError("max-degree-2 orientation produced an out-degree above 1")
    return result


def greedy_independent_set(graph: MultiGraph, rng: random.Random | None = None) -> frozenset[int]:
    """Greedy maximal independent set.

    Scans vertices in ascending id order by default; pass an rng for a
    seeded random scan order.  Maximality guarantees every vertex outside
    the set has a neighbor inside it.
    """
    order: Sequence[int] = list(range(graph.n))
    if rng is not None:
        order = list(order)
        rng.shuffle(order)
    chosen: set[int] = set()
    blocked: set[int] = set()
    for v in order:
        if v in blocked or v in chosen:
            continue
        chosen.add(v)
        blocked.update(graph.neighbors(v))
    return frozenset(chosen)


def avoid_low_outdegrees(
    graph: MultiGraph, k: int, rng: random.Random | None = None
) -> Orientation:
    """Orientation of a (2k+1)-regular graph avoiding out-degrees 1..k.

    Construction: pick a maximal independent set and orient every incident
    edge into it, making its vertices sinks.  Maximality caps each remaining
    vertex's degree inside the rest at 2k, so balancing the rest leaves it
    with in-degree at most k, hence out-degree at least k+1.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = 2 * k + 1
    if graph.regular_degree() != d:
        raise NotRegularError(f"graph is not {d}-regular")

    sinks = greedy_independent_set(graph, rng)
    outside = [v for v in range(graph.n) if v not in sinks]
    for v in outside:
        if not (graph.neighbors(v) & sinks):
            raise InternalError(f"vertex {v} has no neighbor in the independent set")

    toward = [True] * graph.m
    rest_edge_ids = []
    for eid, (u, v) in enumerate(graph.edges):
        if v in sinks:
            toward[eid] = True
        elif u in sinks:
            toward[eid] = False
        else:
            rest_edge_ids.append(eid)

    sub, vmap, sub_edge_ids = induced_subgraph(graph, outside)
    if sub.max_degree() > 2 * k:
        raise InternalError("independent set left a vertex with too many outside neighbors")
    assert sub_edge_ids == rest_edge_ids
    sub_balanced = balanced_orientation(sub)
    inv = {new: old for old, new in vmap.items()}
    for j, eid in enumerate(sub_edge_ids):
        u, _ = graph.edges[eid]
        toward[eid] = inv[sub_balanced.tail(j)] == u

    result = Orientation(graph, toward)
    for v in range(graph.n):
        if 1 <= result.out_degree(v) <= k:
            raise InternalError(f"vertex {v} ended with out-degree {result.out_degree(v)}")
    return result
