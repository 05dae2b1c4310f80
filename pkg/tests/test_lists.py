import pytest
from hypothesis import given

from orientavoid import (
    ForbiddenLists,
    IntervalProfile,
    MultiGraph,
    Orientation,
    classify,
    end_interval_holes,
    lasso_hypothesis,
    shift_down,
    single_home_hypothesis,
    strict_half_bound,
    weak_half_bound,
)
from orientavoid.errors import OutOfRangeForbiddenError
from orientavoid.generators import clique, random_regular, star

from strategies import graphs_with_lists


def profile_for_degree(d, values):
    """Profile of a single star center with degree d and the given list."""
    g = star(d) if d > 0 else MultiGraph(1, [])
    lists = ForbiddenLists.from_dict(g.n, {0: values})
    return IntervalProfile(g, lists)


class TestIntervalProfile:
    def test_middle_pair_d7(self):
        p = profile_for_degree(7, {3, 4})
        holes = p.holes(0)
        homes = p.homes(0)
        assert [(h.lo, h.hi) for h in holes] == [(3, 4)]
        assert [(h.lo, h.hi) for h in homes] == [(0, 2), (5, 7)]
        assert p.above(0) == {5}
        assert p.below(0) == {2}
        assert p.far(0) == {0, 1, 6, 7}

    def test_end_hole_and_interior_hole_d10(self):
        p = profile_for_degree(10, {0, 4, 5})
        assert [(h.lo, h.hi) for h in p.holes(0)] == [(0, 0), (4, 5)]
        assert [(h.lo, h.hi) for h in p.homes(0)] == [(1, 3), (6, 10)]
        first, last = p.end_intervals(0)
        assert first.hole and (first.lo, first.hi) == (0, 0)
        assert not last.hole and (last.lo, last.hi) == (6, 10)

    def test_empty_list_single_home(self):
        p = profile_for_degree(5, set())
        assert p.holes(0) == ()
        assert [(h.lo, h.hi) for h in p.homes(0)] == [(0, 5)]
        assert p.above(0) == p.below(0) == frozenset()
        assert p.far(0) == frozenset(range(6))

    def test_out_of_range_rejected(self):
        g = star(2)
        with pytest.raises(OutOfRangeForbiddenError):
            IntervalProfile(g, ForbiddenLists.from_dict(3, {0: {3}}))
        with pytest.raises(OutOfRangeForbiddenError):
            IntervalProfile(g, ForbiddenLists.from_dict(3, {1: {-1}}))


class TestClassify:
    def test_empty_lists_never_forbidden(self):
        g = clique(4)
        p = IntervalProfile(g, ForbiddenLists.empty(4))
        d = Orientation.all_forward(g)
        assert classify(d, p).forbidden == frozenset()

    def test_value_above_hole(self):
        # degree 7, F = {3, 4}, out-degree 5 lands in A
        g = star(7)
        lists = ForbiddenLists.from_dict(8, {0: {3, 4}})
        p = IntervalProfile(g, lists)
        toward = [True] * 5 + [False] * 2  # center out-degree 5
        cls = classify(Orientation(g, toward), p)
        assert 0 in cls.above
        assert 0 not in cls.forbidden

    def test_cyclic_triangle_all_forbidden(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
        p = IntervalProfile(g, ForbiddenLists.uniform(3, {1}))
        cls = classify(Orientation(g, [True] * 3), p)
        assert cls.forbidden == {0, 1, 2}


class TestHalfBounds:
    def test_strict_holds_at_five(self):
        g = random_regular(6, 5, 0)
        lists = ForbiddenLists.uniform(6, {1, 4})
        assert strict_half_bound(g, lists)

    def test_even_degree_boundary(self):
        g = random_regular(5, 4, 0)
        lists = ForbiddenLists.uniform(5, {0, 1})
        assert not strict_half_bound(g, lists)
        assert weak_half_bound(g, lists)

    def test_isolated_vertex(self):
        g = MultiGraph(1, [])
        lists = ForbiddenLists.empty(1)
        assert not strict_half_bound(g, lists)  # 0 < 0 fails
        assert weak_half_bound(g, lists)
        assert strict_half_bound(g, lists, allow_isolated_empty=True)


class TestLassoHypothesis:
    def test_middle_pair_passes(self):
        assert lasso_hypothesis(profile_for_degree(7, {3, 4}))

    def test_size_one_home_between_holes_fails(self):
        assert not lasso_hypothesis(profile_for_degree(5, {2, 4}))

    def test_size_one_end_home_fails(self):
        assert not lasso_hypothesis(profile_for_degree(4, {2, 3}))

    def test_end_hole_of_size_one_passes(self):
        assert lasso_hypothesis(profile_for_degree(6, {0}))
        assert lasso_hypothesis(profile_for_degree(2, {0}))

    def test_short_home_after_end_hole_fails(self):
        # hole {0} is fine but the home {1,2} sits between two holes
        assert not lasso_hypothesis(profile_for_degree(6, {0, 3}))

    def test_strict_ends_rejects_end_holes(self):
        p = profile_for_degree(2, {0})
        assert lasso_hypothesis(p)
        assert not lasso_hypothesis(p, strict_ends=True)

    def test_isolated_vertex_needs_empty_list(self):
        assert lasso_hypothesis(profile_for_degree(0, set()))
        assert not lasso_hypothesis(profile_for_degree(0, {0}))


class TestEndIntervalHoles:
    def test_bottom_block(self):
        p = profile_for_degree(4, {0, 1})
        assert end_interval_holes(p)
        assert single_home_hypothesis(p)

    def test_both_end_blocks(self):
        p = profile_for_degree(6, {0, 5, 6})
        assert end_interval_holes(p)
        assert single_home_hypothesis(p)  # |F| = 3 <= 3

    def test_interior_hole_fails(self):
        p = profile_for_degree(6, {3})
        assert not end_interval_holes(p)
        assert not single_home_hypothesis(p)

    def test_weak_bound_required(self):
        p = profile_for_degree(3, {0, 3})  # holes at both ends but |F| = 2 > 1.5
        assert end_interval_holes(p)
        assert not single_home_hypothesis(p)


class TestShiftDown:
    def test_drops_zero_and_shifts(self):
        assert shift_down({0, 3, 5}) == {2, 4}

    def test_empty(self):
        assert shift_down(set()) == frozenset()

    def test_only_zero(self):
        assert shift_down({0}) == frozenset()


@given(graphs_with_lists())
def test_intervals_reassemble_and_holes_match_lists(gl):
    graph, lists = gl
    p = IntervalProfile(graph, lists)
    for v in range(graph.n):
        covered = []
        hole_values = set()
        prev_end = -1
        for iv in p.intervals(v):
            assert iv.lo == prev_end + 1
            prev_end = iv.hi
            covered.extend(range(iv.lo, iv.hi + 1))
            if iv.hole:
                hole_values.update(range(iv.lo, iv.hi + 1))
        assert covered == list(range(graph.degree[v] + 1))
        assert hole_values == set(lists[v])


@given(graphs_with_lists())
def test_above_below_counts_match_hole_positions(gl):
    graph, lists = gl
    p = IntervalProfile(graph, lists)
    for v in range(graph.n):
        d = graph.degree[v]
        holes = p.holes(v)
        assert len(p.above(v)) == sum(1 for h in holes if h.hi != d)
        assert len(p.below(v)) == sum(1 for h in holes if h.lo != 0)


@given(graphs_with_lists())
def test_forbidden_xor_home(gl):
    graph, lists = gl
    p = IntervalProfile(graph, lists)
    d = Orientation.all_forward(graph)
    cls = classify(d, p)
    for v in range(graph.n):
        in_home = any(
            d.out_degree(v) in iv for iv in p.intervals(v) if not iv.hole
        )
        assert (v in cls.forbidden) != in_home


@given(graphs_with_lists())
def test_lasso_hypothesis_implies_disjoint_above_below(gl):
    graph, lists = gl
    p = IntervalProfile(graph, lists)
    if lasso_hypothesis(p):
        for v in range(graph.n):
            assert not (p.above(v) & p.below(v))
