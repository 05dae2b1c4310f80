"""Loopless multigraphs, orientations, and path-reversal primitives."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadVertexIdError, LoopEdgeError, NotADirectedPathError


class MultiGraph:
    """Loopless undirected multigraph with stable edge indices.

    Vertices are integers 0..n-1.  Edges keep their construction order and
    are addressed by index, so parallel edges occupy distinct slots and an
    orientation can flip one specific copy.
    """

    __slots__ = ("n", "edges", "degree", "incidence")

    def __init__(self, n: int, edge_pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise BadVertexIdError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        edges: list[tuple[int, int]] = []
        incidence: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        degree = [0] * n
        for eid, (u, v) in enumerate(edge_pairs):
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexIdError(f"edge {eid} endpoint out of range: ({u}, {v})")
            if u == v:
                raise LoopEdgeError(f"edge {eid} is a loop at vertex {u}")
            edges.append((u, v))
            incidence[u].append((eid, v))
            incidence[v].append((eid, u))
            degree[u] += 1
            degree[v] += 1
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.degree: tuple[int, ...] = tuple(degree)
        # incidence[v] lists (edge id, other endpoint) with parallel edges repeated
        self.incidence: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(inc) for inc in incidence
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if v == u else u

    def neighbors(self, v: int) -> set[int]:
        return {w for _, w in self.incidence[v]}

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        d = self.degree[0]
        return d if all(x == d for x in self.degree) else None

    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def induced_subgraph(
    graph: MultiGraph, vertices: Sequence[int]
) -> tuple[MultiGraph, dict[int, int], list[int]]:
    """Subgraph induced on `vertices`.

    Returns (subgraph, old->new vertex map, list mapping new edge index to
    the parent edge id).
    """
    vmap = {v: i for i, v in enumerate(vertices)}
    pairs = []
    edge_ids = []
    for eid, (u, v) in enumerate(graph.edges):
        if u in vmap and v in vmap:
            pairs.append((vmap[u], vmap[v]))
            edge_ids.append(eid)
    return MultiGraph(len(vmap), pairs), vmap, edge_ids


def edge_subgraph(graph: MultiGraph, edge_ids: Sequence[int]) -> tuple[MultiGraph, tuple[int, ...]]:
    """Subgraph on the same vertex set keeping only `edge_ids`.

    Returns (subgraph, mapping from new edge index to parent edge id).
    """
    ids = tuple(edge_ids)
    pairs = [graph.edges[eid] for eid in ids]
    return MultiGraph(graph.n, pairs), ids


@dataclass(frozen=True)
class DirectedPath:
    """A simple directed path given by its vertices and realizing edge ids.

    vertices[i] -> vertices[i+1] must be the direction of edges[i] in the
    orientation the path is used with; `Orientation.reverse_path` checks this.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise NotADirectedPathError("a directed path needs at least two vertices")
        if len(self.edges) != len(self.vertices) - 1:
            raise NotADirectedPathError("edge count must be vertex count minus one")
        if len(set(self.vertices)) != len(self.vertices):
            raise NotADirectedPathError("path vertices must be distinct")
        if len(set(self.edges)) != len(self.edges):
            raise NotADirectedPathError("path edges must be distinct")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]


class Orientation:
    """A direction for every edge of a multigraph.

    Value-like: all mutating operations return a new orientation. toward_v[i]
    is True when edge i = (u, v) points u -> v.
    """

    __slots__ = ("graph", "toward_v", "_out")

    def __init__(self, graph: MultiGraph, toward_v: Iterable[bool]):
        toward = tuple(bool(b) for b in toward_v)
        if len(toward) != graph.m:
            raise ValueError(f"need {graph.m} directions, got {len(toward)}")
        out = [0] * graph.n
        for eid, fwd in enumerate(toward):
            u, v = graph.edges[eid]
            out[u if fwd else v] += 1
        self.graph = graph
        self.toward_v = toward
        self._out = tuple(out)

    @classmethod
    def _raw(cls, graph: MultiGraph, toward: tuple[bool, ...], out: tuple[int, ...]) -> "Orientation":
        o = object.__new__(cls)
        o.graph = graph
        o.toward_v = toward
        o._out = out
        return o

    @classmethod
    def all_forward(cls, graph: MultiGraph) -> "Orientation":
        return cls(graph, [True] * graph.m)

    @classmethod
    def random(cls, graph: MultiGraph, rng: random.Random) -> "Orientation":
        return cls(graph, [rng.random() < 0.5 for _ in range(graph.m)])

    # -- per-edge views ----------------------------------------------------

    def tail(self, eid: int) -> int:
        u, v = self.graph.edges[eid]
        return u if self.toward_v[eid] else v

    def head(self, eid: int) -> int:
        u, v = self.graph.edges[eid]
        return v if self.toward_v[eid] else u

    # -- per-vertex views --------------------------------------------------

    def out_degree(self, v: int) -> int:
        return self._out[v]

    def in_degree(self, v: int) -> int:
        return self.graph.degree[v] - self._out[v]

    def out_degrees(self) -> tuple[int, ...]:
        return self._out

    def imbalance(self, v: int) -> int:
        """out-degree minus in-degree at v."""
        return 2 * self._out[v] - self.graph.degree[v]

    def out_edges(self, v: int) -> list[tuple[int, int]]:
        """(edge id, head) for every edge pointing out of v."""
        return [(eid, w) for eid, w in self.graph.incidence[v] if self.tail(eid) == v]

    def in_edges(self, v: int) -> list[tuple[int, int]]:
        """(edge id, tail) for every edge pointing into v."""
        return [(eid, w) for eid, w in self.graph.incidence[v] if self.head(eid) == v]

    def is_source(self, v: int) -> bool:
        return self.graph.degree[v] > 0 and self._out[v] == self.graph.degree[v]

    def is_sink(self, v: int) -> bool:
        return self.graph.degree[v] > 0 and self._out[v] == 0

    # -- mutations (return new orientations) --------------------------------

    def flipped(self, edge_ids: Iterable[int]) -> "Orientation":
        """New orientation with the listed edges reversed."""
        toward = list(self.toward_v)
        out = list(self._out)
        for eid in edge_ids:
            u, v = self.graph.edges[eid]
            if toward[eid]:
                out[u] -= 1
                out[v] += 1
            else:
                out[v] -= 1
                out[u] += 1
            toward[eid] = not toward[eid]
        return Orientation._raw(self.graph, tuple(toward), tuple(out))

    def reverse_all(self) -> "Orientation":
        """Reverse every edge; out-degrees become degree minus old out-degree."""
        toward = tuple(not b for b in self.toward_v)
        out = tuple(self.graph.degree[v] - self._out[v] for v in range(self.graph.n))
        return Orientation._raw(self.graph, toward, out)

    def reverse_path(self, path: DirectedPath) -> "Orientation":
        """Reverse a directed path; only its endpoints change out-degree."""
        for i, eid in enumerate(path.edges):
            a, b = path.vertices[i], path.vertices[i + 1]
            if self.tail(eid) != a or self.head(eid) != b:
                raise NotADirectedPathError(
                    f"edge {eid} is not directed {a}->{b} in this orientation"
                )
        return self.flipped(path.edges)

    # -- reachability --------------------------------------------------------

    def reachable_set(self, v: int) -> set[int]:
        """All vertices reachable from v by a directed path, including v."""
        return self._bfs(v, forward=True)[0]

    def reaching_set(self, v: int) -> set[int]:
        """All vertices that reach v by a directed path, including v."""
        return self._bfs(v, forward=False)[0]

    def _bfs(self, v: int, forward: bool) -> tuple[set[int], dict[int, tuple[int, int]]]:
        """BFS along (forward=True) or against the orientation.

        Returns the visited set and a parent map child -> (edge id, previous
        vertex) giving BFS-shortest paths.
        """
        if not (0 <= v < self.graph.n):
            raise BadVertexIdError(f"vertex {v} out of range")
        seen = {v}
        parent: dict[int, tuple[int, int]] = {}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for eid, w in self.graph.incidence[x]:
                if w in seen:
                    continue
                points_out = self.tail(eid) == x
                if points_out == forward:
                    seen.add(w)
                    parent[w] = (eid, x)
                    queue.append(w)
        return seen, parent

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph.edges == other.graph.edges and self.toward_v == other.toward_v

    __hash__ = None  # value-like but mutable in spirit; keep out of sets

    def __repr__(self) -> str:
        return f"Orientation(out_degrees={list(self._out)})"


def shortest_directed_path(orientation: Orientation, src: int, dst: int) -> DirectedPath | None:
    """BFS-shortest directed path src -> dst, or None if dst is unreachable."""
    if src == dst:
        return None
    seen, parent = orientation._bfs(src, forward=True)
    if dst not in seen:
        return None
    verts = [dst]
    eids = []
    x = dst
    while x != src:
        eid, prev = parent[x]
        eids.append(eid)
        verts.append(prev)
        x = prev
    verts.reverse()
    eids.reverse()
    return DirectedPath(tuple(verts), tuple(eids))
