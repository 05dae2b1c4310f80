import pytest
from hypothesis import given
from hypothesis import strategies as st

from orientavoid import (
    DirectedPath,
    MultiGraph,
    Orientation,
    shortest_directed_path,
)
from orientavoid.errors import (
    BadVertexIdError,
    LoopEdgeError,
    NotADirectedPathError,
)

from strategies import oriented_multigraphs


def triangle():
    return MultiGraph(3, [(0, 1), (1, 2), (2, 0)])


class TestBuild:
    def test_triangle_degrees(self):
        g = triangle()
        assert g.degree == (2, 2, 2)
        assert g.m == 3

    def test_parallel_edges_count_separately(self):
        g = MultiGraph(2, [(0, 1), (0, 1)])
        assert g.degree == (2, 2)
        assert g.m == 2

    def test_loop_rejected(self):
        with pytest.raises(LoopEdgeError):
            MultiGraph(2, [(0, 0)])

    def test_bad_vertex_rejected(self):
        with pytest.raises(BadVertexIdError):
            MultiGraph(2, [(0, 2)])

    def test_degree_sum_is_twice_edges(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (1, 3), (2, 3), (0, 1)])
        assert sum(g.degree) == 2 * g.m


class TestReachability:
    def test_directed_path(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        d = Orientation(g, [True, True])  # 0 -> 1 -> 2
        assert d.reachable_set(0) == {0, 1, 2}
        assert d.reachable_set(2) == {2}
        assert d.reaching_set(2) == {0, 1, 2}

    def test_cyclic_triangle_strongly_connected(self):
        d = Orientation(triangle(), [True, True, True])
        for v in range(3):
            assert d.reachable_set(v) == {0, 1, 2}

    def test_star_all_out_of_center(self):
        g = MultiGraph(4, [(0, 1), (0, 2), (0, 3)])
        d = Orientation(g, [True] * 3)
        assert d.reachable_set(0) == {0, 1, 2, 3}
        assert d.reachable_set(1) == {1}

    def test_bad_vertex(self):
        d = Orientation(triangle(), [True] * 3)
        with pytest.raises(BadVertexIdError):
            d.reachable_set(5)


class TestReversePath:
    def test_endpoint_only_change(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        d = Orientation(g, [True, True])
        path = DirectedPath((0, 1, 2), (0, 1))
        d2 = d.reverse_path(path)
        assert d.out_degree(0) == 1 and d2.out_degree(0) == 0
        assert d.out_degree(2) == 0 and d2.out_degree(2) == 1
        assert d.out_degree(1) == d2.out_degree(1) == 1

    def test_single_edge(self):
        g = MultiGraph(2, [(0, 1)])
        d = Orientation(g, [True])
        d2 = d.reverse_path(DirectedPath((0, 1), (0,)))
        assert d2.tail(0) == 1 and d2.head(0) == 0

    def test_cyclic_triangle_single_edge_outdegrees(self):
        # reversing one edge of the cycle 0->1->2->0 gives out-degrees {0, 1, 2}
        d = Orientation(triangle(), [True, True, True])
        d2 = d.reverse_path(DirectedPath((0, 1), (0,)))
        assert sorted(d2.out_degrees()) == [0, 1, 2]
        assert sum(d2.out_degrees()) == 3

    def test_misdirected_edge_rejected(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        d = Orientation(g, [True, False])  # 0 -> 1 <- 2
        with pytest.raises(NotADirectedPathError):
            d.reverse_path(DirectedPath((0, 1, 2), (0, 1)))

    def test_repeated_vertex_rejected(self):
        with pytest.raises(NotADirectedPathError):
            DirectedPath((0, 1, 0), (0, 1))


class TestReverseAll:
    def test_cyclic_triangle_fixed_point_degrees(self):
        d = Orientation(triangle(), [True, True, True])
        d2 = d.reverse_all()
        assert d2.out_degrees() == (1, 1, 1)

    def test_source_becomes_sink(self):
        g = MultiGraph(4, [(0, 1), (0, 2), (0, 3)])
        d = Orientation(g, [True] * 3)
        assert d.is_source(0)
        assert d.reverse_all().is_sink(0)

    def test_complement_degrees(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
        d = Orientation(g, [True, False, True, False])
        r = d.reverse_all()
        for v in range(4):
            assert r.out_degree(v) == g.degree[v] - d.out_degree(v)


class TestShortestPath:
    def test_finds_bfs_path(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        d = Orientation(g, [True, True, True, True])  # 0->1->2->3 and 0->3
        p = shortest_directed_path(d, 0, 3)
        assert p.vertices == (0, 3)

    def test_unreachable(self):
        g = MultiGraph(3, [(0, 1)])
        d = Orientation(g, [True])
        assert shortest_directed_path(d, 1, 0) is None
        assert shortest_directed_path(d, 0, 2) is None


@given(oriented_multigraphs())
def test_out_degree_sums_to_edge_count(d):
    assert sum(d.out_degrees()) == d.graph.m
    for v in range(d.graph.n):
        assert d.out_degree(v) + d.in_degree(v) == d.graph.degree[v]


@given(oriented_multigraphs())
def test_reverse_all_is_involution(d):
    assert d.reverse_all().reverse_all() == d


@given(oriented_multigraphs(min_n=2), st.integers(0, 5))
def test_forward_reach_equals_backward_reach_of_reversal(d, vseed):
    v = vseed % d.graph.n
    assert d.reachable_set(v) == d.reverse_all().reaching_set(v)
    assert d.reaching_set(v) == d.reverse_all().reachable_set(v)


@given(oriented_multigraphs(min_n=2), st.integers(0, 5), st.integers(0, 5))
def test_path_reversal_changes_two_out_degrees(d, aseed, bseed):
    a = aseed % d.graph.n
    b = bseed % d.graph.n
    p = shortest_directed_path(d, a, b)
    if p is None:
        return
    d2 = d.reverse_path(p)
    deltas = {
        v: d2.out_degree(v) - d.out_degree(v)
        for v in range(d.graph.n)
        if d2.out_degree(v) != d.out_degree(v)
    }
    assert deltas == {a: -1, b: +1}
