"""Shared hypothesis strategies for small multigraphs and lists."""

from hypothesis import strategies as st

from orientavoid import ForbiddenLists, MultiGraph, Orientation


@st.composite
def multigraphs(draw, min_n=1, max_n=6, max_m=10):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return MultiGraph(n, [])
    m = draw(st.integers(0, max_m))
    pairs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        if v >= u:
            v += 1
        pairs.append((u, v))
    return MultiGraph(n, pairs)


@st.composite
def oriented_multigraphs(draw, **kwargs):
    graph = draw(multigraphs(**kwargs))
    toward = draw(st.lists(st.booleans(), min_size=graph.m, max_size=graph.m))
    return Orientation(graph, toward)


@st.composite
def graphs_with_lists(draw, **kwargs):
    graph = draw(multigraphs(**kwargs))
    sets = []
    for v in range(graph.n):
        d = graph.degree[v]
        sets.append(draw(st.sets(st.integers(0, d), max_size=d + 1)))
    return graph, ForbiddenLists(sets)
