"""Exhaustive ground truth: enumerate all 2^m orientations of a small graph.

A Gray-code sweep flips one edge per step and maintains the number of
vertices whose out-degree is currently forbidden, so each of the 2^m states
costs O(1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import MultiGraph, Orientation
from .lists import ForbiddenLists

DEFAULT_BUDGET = 24

SAT = "SAT"
UNSAT = "UNSAT"


@dataclass(frozen=True)
class OracleResult:
    status: str  # SAT | UNSAT
    witness: Orientation | None
    solution_count: int
    enumerated_count: int


def verify(
    graph: MultiGraph, orientation: Orientation, lists: ForbiddenLists
) -> tuple[bool, list[tuple[int, int]]]:
    """Check that no out-degree is forbidden.

    Returns (ok, violations) where violations lists each offending
    (vertex, out-degree) pair.
    """
    violations = [
        (v, orientation.out_degree(v))
        for v in range(graph.n)
        if orientation.out_degree(v) in lists[v]
    ]
    return not violations, violations


def decide(
    graph: MultiGraph,
    lists: ForbiddenLists,
    budget: int = DEFAULT_BUDGET,
    early_stop: bool = False,
) -> OracleResult:
    """Count avoiding orientations over all 2^m direction assignments.

    With early_stop, returns as soon as a witness is found; solution_count
    is then a lower bound and enumerated_count records how far the sweep got.
    """
    m = graph.m
    if m > budget:
        raise BudgetExceededError(f"graph has {m} edges, budget is {budget}")
    lists.validate(graph)

    # per-vertex bitmask of forbidden out-degree values
    forb = [0] * graph.n
    for v in range(graph.n):
        for x in lists[v]:
            forb[v] |= 1 << x

    toward = [True] * m
    out = [0] * graph.n
    for u, _ in graph.edges:
        out[u] += 1
    bad = sum(1 for v in range(graph.n) if (forb[v] >> out[v]) & 1)

    count = 0
    witness: Orientation | None = None
    total = 1 << m
    edges = graph.edges

    if bad == 0:
        count += 1
        witness = Orientation(graph, toward)
        if early_stop:
            return OracleResult(SAT, witness, count, 1)

    for step in range(1, total):
        e = (step & -step).bit_length() - 1  # Gray code: flip lowest set bit's edge
        u, v = edges[e]
        if toward[e]:
            src, dst = u, v
        else:
            src, dst = v, u
        toward[e] = not toward[e]
        bad -= (forb[src] >> out[src]) & 1
        bad -= (forb[dst] >> out[dst]) & 1
        out[src] -= 1
        out[dst] += 1
        bad += (forb[src] >> out[src]) & 1
        bad += (forb[dst] >> out[dst]) & 1
        if bad == 0:
            count += 1
            if witness is None:
                witness = Orientation(graph, toward)
            if early_stop:
                return OracleResult(SAT, witness, count, step + 1)

    status = SAT if count else UNSAT
    return OracleResult(status, witness, count, total)
