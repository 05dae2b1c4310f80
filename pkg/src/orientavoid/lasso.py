"""Lasso local search: escape forbidden out-degrees by reversing paths and
flipping lassos.

A lasso is a directed path (v1, ..., vk) plus a closing edge between vk and
an interior vertex vi (2 <= i <= k-1).  In an out-lasso everything points
away from v1; an in-lasso is the same picture fully reversed.  Flipping a
lasso reverses the sub-path (v1, ..., vi) together with the closing edge,
which changes out-degrees only at v1, vi and vk: by (-1, +2, -1) for an
out-lasso and (+1, -2, +1) for an in-lasso.

The search drives the potential (|D_F|, -|D_X|) strictly down in
lexicographic order, where D_F holds the vertices with forbidden
out-degree and D_X those whose out-degree is adjacent to no hole.  When
every vertex's list has holes of size at most 2, homes of size at least 3
between holes, and end intervals that are single-value holes or homes of
size at least 2, some move always exists and the search ends in an avoiding
orientation after at most (n+1)^2 accepted moves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .balanced import balanced_orientation
from .errors import InternalError, PreconditionViolatedError, StaleLassoError
from .graph import DirectedPath, MultiGraph, Orientation
from .lists import (
    ForbiddenLists,
    IntervalProfile,
    VertexClassification,
    classify,
    lasso_hypothesis,
)

OUT = "out"
IN = "in"

DONE = "done"
MOVED = "moved"
STUCK = "stuck"

BALANCED = "balanced"
RANDOM = "random"


@dataclass(frozen=True)
class Lasso:
    """A lasso found in a concrete orientation.

    vertices[0] is the start; anchor is the 0-based index of the interior
    vertex the closing edge attaches to (1 <= anchor <= len - 2).
    path_edges[j] realizes the step between vertices[j] and vertices[j+1];
    for kind=out they point forward and the closing edge points from the
    terminal vertex to the anchor, for kind=in everything is reversed.
    """

    kind: str
    vertices: tuple[int, ...]
    anchor: int
    path_edges: tuple[int, ...]
    closing_edge: int

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a lasso needs at least three vertices")
        if not 1 <= self.anchor <= len(self.vertices) - 2:
            raise ValueError(f"anchor index {self.anchor} out of range")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("lasso vertices must be distinct")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def anchor_vertex(self) -> int:
        return self.vertices[self.anchor]

    @property
    def terminal(self) -> int:
        return self.vertices[-1]


def find_lasso(orientation: Orientation, v: int, kind: str) -> Lasso | None:
    """Grow a lasso of the given kind starting at v.

    Requires that the only vertex both reachable from v and reaching v is v
    itself.  Grows a non-extendable directed path greedily (lowest vertex id
    first, lowest edge id on parallel ties); the terminal vertex then either
    has all its forward neighbors on the path, closing a lasso, or is a sink
    (kind=out) / source (kind=in), in which case None is returned.
    """
    if kind not in (OUT, IN):
        raise ValueError(f"kind must be {OUT!r} or {IN!r}")
    if orientation.reachable_set(v) & orientation.reaching_set(v) != {v}:
        raise PreconditionViolatedError(
            f"vertex {v} lies on a directed cycle; lasso growth needs S_v & T_v == {{{v}}}"
        )
    forward = kind == OUT
    path = [v]
    pos = {v: 0}
    path_edges: list[int] = []
    while True:
        x = path[-1]
        step = orientation.out_edges(x) if forward else orientation.in_edges(x)
        extend: tuple[int, int] | None = None  # (vertex, edge)
        closing: tuple[int, int] | None = None
        for eid, w in step:
            if w in pos:
                if (closing is None or (w, eid) < closing) and w != x:
                    closing = (w, eid)
            elif extend is None or (w, eid) < extend:
                extend = (w, eid)
        if extend is not None:
            w, eid = extend
            pos[w] = len(path)
            path.append(w)
            path_edges.append(eid)
            continue
        if closing is None:
            return None  # terminal is a sink (out) or source (in)
        w, eid = closing
        anchor = pos[w]
        if anchor == 0:
            raise InternalError("closing edge returned to the start vertex")
        return Lasso(kind, tuple(path), anchor, tuple(path_edges), eid)


def flip_lasso(orientation: Orientation, lasso: Lasso) -> Orientation:
    """Reverse the sub-path up to the anchor together with the closing edge."""
    forward = lasso.kind == OUT
    for j in range(lasso.anchor):
        a, b = lasso.vertices[j], lasso.vertices[j + 1]
        if not forward:
            a, b = b, a
        eid = lasso.path_edges[j]
        if orientation.tail(eid) != a or orientation.head(eid) != b:
            raise StaleLassoError(f"path edge {eid} is no longer directed {a}->{b}")
    ca, cb = lasso.terminal, lasso.anchor_vertex
    if not forward:
        ca, cb = cb, ca
    eid = lasso.closing_edge
    if orientation.tail(eid) != ca or orientation.head(eid) != cb:
        raise StaleLassoError(f"closing edge {eid} is no longer directed {ca}->{cb}")
    return orientation.flipped(list(lasso.path_edges[: lasso.anchor]) + [lasso.closing_edge])


@dataclass(frozen=True)
class Move:
    """One accepted local-search move with the potential on both sides."""

    kind: str  # "reverse_path" | "flip_lasso"
    vertices: tuple[int, ...]
    potential_before: tuple[int, int]
    potential_after: tuple[int, int]

    def log_line(self) -> str:
        vs = ",".join(str(v) for v in self.vertices)
        b, a = self.potential_before, self.potential_after
        return f"{self.kind} {vs} ({b[0]},{b[1]})->({a[0]},{a[1]})"


@dataclass
class MoveTrace:
    """Accepted moves in order; the potential strictly decreases along it."""

    moves: list[Move] = field(default_factory=list)

    def append(self, move: Move) -> None:
        self.moves.append(move)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def log_lines(self) -> list[str]:
        return [m.log_line() for m in self.moves]


@dataclass(frozen=True)
class StepResult:
    status: str  # done | moved | stuck
    orientation: Orientation
    move: Move | None = None


def _potential(cls: VertexClassification) -> tuple[int, int]:
    return (len(cls.forbidden), -len(cls.far))


def improve_step(orientation: Orientation, profile: IntervalProfile) -> StepResult:
    """One local-search step.

    Returns done if no out-degree is forbidden.  Otherwise scans the
    offending vertices in id order and plays, per vertex, the canonical
    candidate of each applicable case:

    * raise case (out-degree + 1 sits just above a hole): reverse a path
      into v from some w not classified above-a-hole; failing that reverse
      a path from v to a vertex that both reaches and is reached by v;
      failing that flip an in-lasso grown from v.
    * lower case (out-degree - 1 sits just below a hole): the mirror image,
      reversing a path out of v, then a path into v, then an out-lasso.

    The first candidate that strictly lowers (|D_F|, -|D_X|) is applied;
    stuck is returned when none does, which cannot happen while every list
    satisfies the lasso hypothesis.
    """
    cls = classify(orientation, profile)
    if not cls.forbidden:
        return StepResult(DONE, orientation)
    pot = _potential(cls)
    for v in sorted(cls.forbidden):
        x = orientation.out_degree(v)
        cases = []
        if x + 1 in profile.above(v):
            cases.append(True)
        if x - 1 in profile.below(v):
            cases.append(False)
        for raise_case in cases:
            cand = _case_candidate(orientation, profile, cls, v, raise_case)
            if cand is None:
                continue
            new_orientation, kind, verts = cand
            new_pot = _potential(classify(new_orientation, profile))
            if new_pot < pot:
                move = Move(kind, verts, pot, new_pot)
                return StepResult(MOVED, new_orientation, move)
    return StepResult(STUCK, orientation)


def _case_candidate(
    orientation: Orientation,
    profile: IntervalProfile,
    cls: VertexClassification,
    v: int,
    raise_case: bool,
) -> tuple[Orientation, str, tuple[int, ...]] | None:
    seen_to, parent_to = orientation._bfs(v, forward=False)
    seen_from, parent_from = orientation._bfs(v, forward=True)
    if raise_case:
        # v gains one out-degree unit: reverse a path ending at v
        escape = [w for w in seen_to if w != v and w not in cls.above]
        if escape:
            path = _path_to(v, min(escape), parent_to)
            return orientation.reverse_path(path), "reverse_path", path.vertices
        mid = (seen_from & seen_to) - {v}
        if mid:
            path = _path_from(v, min(mid), parent_from)
            return orientation.reverse_path(path), "reverse_path", path.vertices
        lasso = find_lasso(orientation, v, IN)
    else:
        # v sheds one out-degree unit: reverse a path starting at v
        escape = [u for u in seen_from if u != v and u not in cls.below]
        if escape:
            path = _path_from(v, min(escape), parent_from)
            return orientation.reverse_path(path), "reverse_path", path.vertices
        mid = (seen_from & seen_to) - {v}
        if mid:
            path = _path_to(v, min(mid), parent_to)
            return orientation.reverse_path(path), "reverse_path", path.vertices
        lasso = find_lasso(orientation, v, OUT)
    if lasso is None:
        return None
    return flip_lasso(orientation, lasso), "flip_lasso", lasso.vertices


def _path_from(v: int, u: int, parent_from: dict[int, tuple[int, int]]) -> DirectedPath:
    """Reconstruct the BFS path v -> u from forward-BFS parents."""
    verts = [u]
    eids = []
    x = u
    while x != v:
        eid, prev = parent_from[x]
        eids.append(eid)
        verts.append(prev)
        x = prev
    verts.reverse()
    eids.reverse()
    return DirectedPath(tuple(verts), tuple(eids))


def _path_to(v: int, w: int, parent_to: dict[int, tuple[int, int]]) -> DirectedPath:
    """Reconstruct the BFS path w -> v from backward-BFS parents."""
    verts = [w]
    eids = []
    x = w
    while x != v:
        eid, nxt = parent_to[x]
        eids.append(eid)
        verts.append(nxt)
        x = nxt
    return DirectedPath(tuple(verts), tuple(eids))


@dataclass
class LassoResult:
    """Outcome of a lasso search run."""

    ok: bool
    orientation: Orientation
    trace: MoveTrace
    hypothesis_ok: bool

    @property
    def moves(self) -> int:
        return len(self.trace)


def lasso_solve(
    graph: MultiGraph,
    lists: ForbiddenLists,
    initial: Orientation | str = BALANCED,
    seed: int = 0,
    profile: IntervalProfile | None = None,
) -> LassoResult:
    """Run the local search to a fixpoint.

    initial may be an orientation, "balanced" (the default), or "random"
    with the given seed.  Success is guaranteed when every list satisfies
    the lasso hypothesis; on other lists a stuck fixpoint is a legitimate
    outcome and the caller may restart from another seed.
    """
    if profile is None:
        profile = IntervalProfile(graph, lists)
    if isinstance(initial, Orientation):
        orientation = initial
    elif initial == BALANCED:
        orientation = balanced_orientation(graph)
    elif initial == RANDOM:
        orientation = Orientation.random(graph, random.Random(seed))
    else:
        raise ValueError(f"unknown initial orientation spec {initial!r}")

    hypothesis_ok = lasso_hypothesis(profile)
    trace = MoveTrace()
    limit = (graph.n + 1) ** 2
    while True:
        step = improve_step(orientation, profile)
        if step.status == DONE:
            return LassoResult(True, orientation, trace, hypothesis_ok)
        if step.status == STUCK:
            if hypothesis_ok:
                raise InternalError("stuck despite the lasso hypothesis holding")
            return LassoResult(False, orientation, trace, hypothesis_ok)
        orientation = step.orientation
        trace.append(step.move)
        if len(trace) > limit:
            raise InternalError("accepted more moves than the potential permits")
