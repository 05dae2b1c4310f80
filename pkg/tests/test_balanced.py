import random

import pytest

from orientavoid import (
    ForbiddenLists,
    MultiGraph,
    avoid_low_outdegrees,
    balanced_orientation,
    greedy_independent_set,
    orient_max_degree_two,
    verify,
)
from orientavoid.errors import DegreeTooHighError, NotRegularError
from orientavoid.generators import (
    clique,
    cycle,
    path,
    petersen,
    random_multigraph,
    random_regular,
)


class TestBalanced:
    def test_four_cycle_is_eulerian(self):
        d = balanced_orientation(cycle(4))
        assert d.out_degrees() == (1, 1, 1, 1)
        assert all(d.imbalance(v) == 0 for v in range(4))

    def test_path_parity(self):
        d = balanced_orientation(path(3))
        assert d.imbalance(1) == 0
        assert {d.imbalance(0), d.imbalance(2)} <= {-1, 1}

    def test_five_regular_hits_the_middle(self):
        for seed in range(5):
            g = random_regular(8, 5, seed)
            d = balanced_orientation(g)
            assert all(d.out_degree(v) in (2, 3) for v in range(8))

    def test_random_multigraphs_bounds(self):
        rng = random.Random(3)
        for _ in range(100):
            g = random_multigraph(rng.randint(2, 8), rng.randint(1, 16), rng)
            d = balanced_orientation(g)
            assert sum(d.out_degrees()) == g.m
            for v in range(g.n):
                assert abs(d.imbalance(v)) <= 1
                if g.degree[v] % 2 == 0:
                    assert d.imbalance(v) == 0


class TestOrientMaxDegreeTwo:
    def test_five_cycle(self):
        d = orient_max_degree_two(cycle(5))
        assert all(d.out_degree(v) == 1 for v in range(5))

    def test_single_edge(self):
        d = orient_max_degree_two(MultiGraph(2, [(0, 1)]))
        assert sorted(d.out_degrees()) == [0, 1]

    def test_path_plus_cycle(self):
        # P3 on {0,1,2} together with a triangle on {3,4,5}
        g = MultiGraph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
        d = orient_max_degree_two(g)
        assert all(d.out_degree(v) in (0, 1) for v in range(6))

    def test_degree_three_rejected(self):
        with pytest.raises(DegreeTooHighError):
            orient_max_degree_two(MultiGraph(4, [(0, 1), (0, 2), (0, 3)]))


class TestIndependentSet:
    def test_greedy_is_maximal(self):
        rng = random.Random(9)
        for _ in range(50):
            g = random_multigraph(rng.randint(2, 9), rng.randint(1, 16), rng)
            mis = greedy_independent_set(g)
            for v in mis:
                assert not (g.neighbors(v) & mis)
            for v in range(g.n):
                if v not in mis:
                    assert g.neighbors(v) & mis


class TestAvoidLowOutdegrees:
    def test_k4_construction(self):
        d = avoid_low_outdegrees(clique(4), 1)
        assert sorted(d.out_degrees()) == [0, 2, 2, 2]

    def test_k6_construction(self):
        d = avoid_low_outdegrees(clique(6), 2)
        assert sorted(d.out_degrees()) == [0, 3, 3, 3, 3, 3]

    def test_petersen(self):
        d = avoid_low_outdegrees(petersen(), 1)
        ok, _ = verify(petersen(), d, ForbiddenLists.uniform(10, {1}))
        assert ok

    def test_not_regular_rejected(self):
        with pytest.raises(NotRegularError):
            avoid_low_outdegrees(path(4), 1)
        with pytest.raises(NotRegularError):
            avoid_low_outdegrees(clique(4), 2)  # 3-regular but k = 2 needs 5-regular

    def test_outputs_split_into_sinks_and_high(self):
        rng = random.Random(4)
        for k in (1, 2, 3):
            d_target = 2 * k + 1
            for _ in range(10):
                n = rng.choice([x for x in range(max(4, d_target + 1), 14) if x * d_target % 2 == 0])
                g = random_regular(n, d_target, rng)
                d = avoid_low_outdegrees(g, k)
                for v in range(n):
                    assert d.out_degree(v) == 0 or d.out_degree(v) >= k + 1
