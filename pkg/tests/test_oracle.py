import random

import pytest
from hypothesis import given

from orientavoid import ForbiddenLists, MultiGraph, Orientation, decide, verify
from orientavoid.errors import BudgetExceededError
from orientavoid.generators import clique, random_multigraph

from strategies import graphs_with_lists


class TestDecide:
    def test_triangle_middle_unsat(self):
        result = decide(clique(3), ForbiddenLists.uniform(3, {1}))
        assert result.status == "UNSAT"
        assert result.solution_count == 0
        assert result.enumerated_count == 8
        assert result.witness is None

    def test_single_edge_no_lists(self):
        g = MultiGraph(2, [(0, 1)])
        result = decide(g, ForbiddenLists.empty(2))
        assert result.status == "SAT"
        assert result.solution_count == 2

    def test_k5_middle_pair_unsat(self):
        result = decide(clique(5), ForbiddenLists.uniform(5, {2, 3}))
        assert result.status == "UNSAT"
        assert result.solution_count == 0
        assert result.enumerated_count == 1024

    def test_budget_enforced(self):
        g = random_multigraph(6, 13, 0)
        with pytest.raises(BudgetExceededError):
            decide(g, ForbiddenLists.empty(6), budget=12)

    def test_early_stop_returns_witness(self):
        g = clique(4)
        result = decide(g, ForbiddenLists.uniform(4, {0}), early_stop=True)
        assert result.status == "SAT"
        ok, _ = verify(g, result.witness, ForbiddenLists.uniform(4, {0}))
        assert ok
        assert result.enumerated_count <= 1 << g.m

    def test_exact_count_against_direct_enumeration(self):
        # independent check: re-count by orienting every subset explicitly
        rng = random.Random(5)
        for _ in range(20):
            g = random_multigraph(rng.randint(2, 5), rng.randint(1, 7), rng)
            sets = [
                {x for x in range(g.degree[v] + 1) if rng.random() < 0.4}
                for v in range(g.n)
            ]
            lists = ForbiddenLists(sets)
            expect = 0
            for mask in range(1 << g.m):
                d = Orientation(g, [(mask >> e) & 1 == 1 for e in range(g.m)])
                if all(d.out_degree(v) not in lists[v] for v in range(g.n)):
                    expect += 1
            assert decide(g, lists).solution_count == expect


class TestVerify:
    def test_cyclic_triangle_all_violations(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
        d = Orientation(g, [True, True, True])
        ok, violations = verify(g, d, ForbiddenLists.uniform(3, {1}))
        assert not ok
        assert len(violations) == 3

    def test_empty_lists_always_ok(self):
        g = clique(3)
        ok, violations = verify(g, Orientation.all_forward(g), ForbiddenLists.empty(3))
        assert ok and violations == []

    def test_middle_vertex_of_directed_path(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        d = Orientation(g, [True, True])  # 0 -> 1 -> 2, so vertex 1 has out-degree 1
        ok, violations = verify(g, d, ForbiddenLists.from_dict(3, {1: {1}}))
        assert not ok
        assert violations == [(1, 1)]


def test_count_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(10):
        g = random_multigraph(rng.randint(2, 5), rng.randint(1, 8), rng)
        sets = [
            {x for x in range(g.degree[v] + 1) if rng.random() < 0.4} for v in range(g.n)
        ]
        lists = ForbiddenLists(sets)
        base = decide(g, lists).solution_count
        perm = list(range(g.n))
        rng.shuffle(perm)
        g2 = MultiGraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        lists2 = ForbiddenLists.from_dict(g.n, {perm[v]: sets[v] for v in range(g.n)})
        assert decide(g2, lists2).solution_count == base


@given(graphs_with_lists(max_n=5, max_m=8))
def test_witness_always_verifies_and_empty_lists_count_all(gl):
    graph, lists = gl
    result = decide(graph, lists)
    if result.witness is not None:
        ok, _ = verify(graph, result.witness, lists)
        assert ok
    assert (result.status == "UNSAT") == (result.solution_count == 0)
    empty = decide(graph, ForbiddenLists.empty(graph.n))
    assert empty.solution_count == 1 << graph.m
