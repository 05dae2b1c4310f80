import random

import pytest

from orientavoid import (
    DegreeBounds,
    ForbiddenLists,
    IntervalProfile,
    MultiGraph,
    Orientation,
    ViolationCertificate,
    decide,
    home_bounds,
    orient_bounded,
    single_home_solve,
    verify,
)
from orientavoid.bounded import LOWER, UPPER
from orientavoid.errors import HypothesisViolatedError, MalformedBoundsError
from orientavoid.generators import (
    clique,
    cycle,
    random_lists_end_holes,
    random_multigraph,
    star,
)


def exhaustive_feasible(graph, bounds):
    for mask in range(1 << graph.m):
        d = Orientation(graph, [(mask >> e) & 1 == 1 for e in range(graph.m)])
        if all(
            bounds.lower[v] <= d.out_degree(v) <= bounds.upper[v] for v in range(graph.n)
        ):
            return True
    return False


def recompute_counts(graph, vertices):
    inside = sum(1 for u, v in graph.edges if u in vertices and v in vertices)
    boundary = sum(1 for u, v in graph.edges if (u in vertices) != (v in vertices))
    return inside, boundary


class TestOrientBounded:
    def test_triangle_exact_ones(self):
        result = orient_bounded(clique(3), DegreeBounds([1, 1, 1], [1, 1, 1]))
        assert isinstance(result, Orientation)
        assert result.out_degrees() == (1, 1, 1)

    def test_triangle_all_zero_upper_certificate(self):
        result = orient_bounded(clique(3), DegreeBounds([0, 0, 0], [0, 0, 0]))
        assert isinstance(result, ViolationCertificate)
        assert result.kind == UPPER
        assert result.vertices == frozenset({0, 1, 2})
        assert result.inside_edges == 3 and result.bound_sum == 0
        assert result.recheck(clique(3), DegreeBounds([0, 0, 0], [0, 0, 0]))

    def test_star_leaves_force_center(self):
        g = star(3)
        result = orient_bounded(g, DegreeBounds([2, 0, 0, 0], [3, 0, 0, 0]))
        assert isinstance(result, Orientation)
        assert result.out_degree(0) == 3

    def test_lower_violation(self):
        g = MultiGraph(2, [(0, 1)])
        result = orient_bounded(g, DegreeBounds([1, 1], [1, 1]))
        assert isinstance(result, ViolationCertificate)
        assert result.kind == LOWER
        assert result.recheck(g, DegreeBounds([1, 1], [1, 1]))

    def test_malformed_bounds(self):
        with pytest.raises(MalformedBoundsError):
            DegreeBounds([2], [1])
        with pytest.raises(MalformedBoundsError):
            orient_bounded(MultiGraph(2, [(0, 1)]), DegreeBounds([0, 0], [2, 1]))

    def test_agreement_with_exhaustive_search(self):
        rng = random.Random(17)
        for _ in range(150):
            g = random_multigraph(rng.randint(2, 6), rng.randint(1, 9), rng)
            lower, upper = [], []
            for v in range(g.n):
                lo = rng.randint(0, g.degree[v])
                lower.append(lo)
                upper.append(rng.randint(lo, g.degree[v]))
            bounds = DegreeBounds(lower, upper)
            result = orient_bounded(g, bounds)
            feasible = exhaustive_feasible(g, bounds)
            if isinstance(result, Orientation):
                assert feasible
                for v in range(g.n):
                    assert bounds.lower[v] <= result.out_degree(v) <= bounds.upper[v]
            else:
                assert not feasible
                inside, boundary = recompute_counts(g, result.vertices)
                if result.kind == LOWER:
                    total = sum(bounds.lower[v] for v in result.vertices)
                    assert total > inside + boundary
                else:
                    total = sum(bounds.upper[v] for v in result.vertices)
                    assert total < inside
                assert (inside, boundary) == (result.inside_edges, result.boundary_edges)
                assert total == result.bound_sum


class TestSingleHomeSolve:
    def test_four_cycle_no_sinks(self):
        g = cycle(4)
        lists = ForbiddenLists.uniform(4, {0})
        d = single_home_solve(g, lists)
        ok, _ = verify(g, d, lists)
        assert ok

    def test_k4_no_sinks(self):
        g = clique(4)
        lists = ForbiddenLists.uniform(4, {0})
        d = single_home_solve(g, lists)
        ok, _ = verify(g, d, lists)
        assert ok
        # the same instance is satisfiable per the exhaustive count
        assert decide(g, lists).status == "SAT"

    def test_hypothesis_rejected_when_bound_fails(self):
        g = clique(4)  # 3-regular; holes at both ends but |F| = 2 > 1.5
        lists = ForbiddenLists.uniform(4, {0, 3})
        with pytest.raises(HypothesisViolatedError):
            single_home_solve(g, lists)

    def test_hypothesis_rejected_for_interior_hole(self):
        g = clique(5)
        with pytest.raises(HypothesisViolatedError):
            single_home_solve(g, ForbiddenLists.uniform(5, {2}))

    def test_never_certified_infeasible_on_valid_lists(self):
        rng = random.Random(23)
        for _ in range(200):
            g = random_multigraph(rng.randint(2, 7), rng.randint(1, 12), rng)
            lists = random_lists_end_holes(g, rng)
            d = single_home_solve(g, lists)  # would raise on a certificate
            ok, _ = verify(g, d, lists)
            assert ok

    def test_home_bounds_reads_the_single_home(self):
        g = star(4)
        lists = ForbiddenLists.from_dict(5, {0: {0, 4}})
        bounds = home_bounds(IntervalProfile(g, lists))
        assert bounds.lower[0] == 1 and bounds.upper[0] == 3
