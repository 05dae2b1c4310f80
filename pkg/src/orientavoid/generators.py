"""Instance generators: graph families and forbidden-list samplers."""

from __future__ import annotations

import itertools
import random

from .errors import InternalError, ParityError
from .graph import MultiGraph
from .lists import ForbiddenLists, _lasso_list_ok


def _as_rng(seed: int | random.Random | None) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


# -- graph families ----------------------------------------------------------


def random_regular(n: int, d: int, seed: int | random.Random | None = None) -> MultiGraph:
    """Configuration-model random d-regular multigraph.

    Degree stubs are paired uniformly; pairs that would form loops are
    re-paired among themselves a bounded number of times before a full
    restart.  Parallel edges are kept.
    """
    if d < 0 or n < 0:
        raise ValueError("n and d must be nonnegative")
    if (n * d) % 2 == 1:
        raise ParityError(f"n*d = {n * d} is odd; no {d}-regular graph on {n} vertices")
    if d > 0 and n < 2:
        raise ParityError("positive degree needs at least two vertices to stay loopless")
    rng = _as_rng(seed)
    for _ in range(1000):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        for _ in range(200):
            bad = [i for i, (a, b) in enumerate(pairs) if a == b]
            if not bad:
                break
            loose = [s for i in bad for s in pairs[i]]
            rng.shuffle(loose)
            it = iter(loose)
            for i, a in zip(bad, it):
                pairs[i] = (a, next(it))
        if all(a != b for a, b in pairs):
            return MultiGraph(n, pairs)
    raise InternalError("configuration model failed to produce a loopless pairing")


def clique(n: int) -> MultiGraph:
    return MultiGraph(n, list(itertools.combinations(range(n), 2)))


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> MultiGraph:
    return MultiGraph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def random_two_degenerate(n: int, seed: int | random.Random | None = None) -> MultiGraph:
    """Each new vertex attaches with 1 or 2 edges to earlier vertices,
    so every subgraph keeps a vertex of degree at most 2."""
    rng = _as_rng(seed)
    pairs = []
    for v in range(1, n):
        for _ in range(rng.randint(1, 2)):
            pairs.append((rng.randrange(v), v))
    return MultiGraph(n, pairs)


def random_bipartite(a: int, b: int, p: float, seed: int | random.Random | None = None) -> MultiGraph:
    """Each of the a*b cross pairs is an edge independently with probability p."""
    rng = _as_rng(seed)
    pairs = [
        (i, a + j) for i in range(a) for j in range(b) if rng.random() < p
    ]
    return MultiGraph(a + b, pairs)


def random_multigraph(n: int, m: int, seed: int | random.Random | None = None) -> MultiGraph:
    """m uniformly random non-loop edges; parallel edges allowed."""
    if m > 0 and n < 2:
        raise ValueError("edges need at least two vertices")
    rng = _as_rng(seed)
    pairs = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        pairs.append((u, v))
    return MultiGraph(n, pairs)


def k6_minus_matching(size: int) -> MultiGraph:
    """The 6-clique with a matching of the given size removed.

    The matching is {(0,1), (2,3), (4,5)} truncated to `size`; size 3 gives
    the complete tripartite graph on parts {0,1}, {2,3}, {4,5}.
    """
    if not 0 <= size <= 3:
        raise ValueError("matching size must be between 0 and 3")
    removed = {(0, 1), (2, 3), (4, 5)}
    removed = set(list(sorted(removed))[:size])
    pairs = [e for e in itertools.combinations(range(6), 2) if e not in removed]
    return MultiGraph(6, pairs)


def k6_decomposition(size: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bipartite/sparse edge split for `k6_minus_matching(size)`.

    size 3: the complete bipartite part joins {0,1} to the rest and the
    sparse part is the 4-cycle 2-4-3-5.  size 2: the bipartite part joins
    the still-adjacent pair {4,5} to the rest; the sparse part is the
    4-cycle 0-2-1-3 plus the edge (4,5).
    """
    graph = k6_minus_matching(size)
    if size == 3:
        bip_test = lambda u, v: (u in (0, 1)) != (v in (0, 1))
    elif size == 2:
        bip_test = lambda u, v: (u in (4, 5)) != (v in (4, 5))
    else:
        raise ValueError("decompositions are provided for matching sizes 2 and 3")
    bip = tuple(e for e, (u, v) in enumerate(graph.edges) if bip_test(u, v))
    sparse = tuple(e for e in range(graph.m) if e not in set(bip))
    return bip, sparse


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, outer + spokes + inner)


# -- forbidden-list samplers --------------------------------------------------


def random_lists(graph: MultiGraph, seed: int | random.Random | None = None) -> ForbiddenLists:
    """Arbitrary lists: every value forbidden independently, with the
    per-vertex density itself random (full lists are possible)."""
    rng = _as_rng(seed)
    sets = []
    for v in range(graph.n):
        p = rng.random()
        sets.append({x for x in range(graph.degree[v] + 1) if rng.random() < p})
    return ForbiddenLists(sets)


def random_lists_strict_half(
    graph: MultiGraph, seed: int | random.Random | None = None
) -> ForbiddenLists:
    """Uniform random lists with |F(v)| < d(v)/2 (empty at isolated vertices)."""
    rng = _as_rng(seed)
    sets = []
    for v in range(graph.n):
        d = graph.degree[v]
        top = max(0, (d - 1) // 2)
        k = rng.randint(0, top)
        sets.append(rng.sample(range(d + 1), k))
    return ForbiddenLists(sets)


def random_lists_end_holes(
    graph: MultiGraph, seed: int | random.Random | None = None
) -> ForbiddenLists:
    """Lists forbidding a block at each end of 0..d with |F(v)| <= d(v)/2."""
    rng = _as_rng(seed)
    sets = []
    for v in range(graph.n):
        d = graph.degree[v]
        low = rng.randint(0, d // 2)
        high = rng.randint(0, d // 2 - low)
        sets.append(set(range(low)) | set(range(d - high + 1, d + 1)))
    return ForbiddenLists(sets)


_lasso_list_cache: dict[int, list[frozenset[int]]] = {}


def _lasso_lists_for_degree(d: int) -> list[frozenset[int]]:
    if d not in _lasso_list_cache:
        if d > 16:
            raise ValueError("lasso-shaped list sampling is enumerated only up to degree 16")
        options = []
        for mask in range(1 << (d + 1)):
            values = frozenset(x for x in range(d + 1) if (mask >> x) & 1)
            if _lasso_list_ok(d, values):
                options.append(values)
        _lasso_list_cache[d] = options
    return _lasso_list_cache[d]


def random_lists_lasso(
    graph: MultiGraph, seed: int | random.Random | None = None
) -> ForbiddenLists:
    """Per-vertex lists sampled uniformly from those the lasso search is
    guaranteed on (holes <= 2, interior homes >= 3, well-shaped ends)."""
    rng = _as_rng(seed)
    sets = []
    for v in range(graph.n):
        options = _lasso_lists_for_degree(graph.degree[v])
        sets.append(rng.choice(options))
    return ForbiddenLists(sets)
