"""Forbidden out-degree lists, hole/home intervals, and hypothesis checks.

For a vertex of degree d the value range 0..d splits into maximal intervals
that are either inside the forbidden set ("holes") or outside it ("homes").
Home values sitting immediately above a hole form A(v), those immediately
below a hole form B(v), and home values adjacent to no hole form X(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import OutOfRangeForbiddenError
from .graph import MultiGraph, Orientation


class ForbiddenLists:
    """Per-vertex sets of forbidden out-degree values."""

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[Iterable[int]]):
        self.sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)

    @classmethod
    def empty(cls, n: int) -> "ForbiddenLists":
        return cls([()] * n)

    @classmethod
    def uniform(cls, n: int, values: Iterable[int]) -> "ForbiddenLists":
        vals = frozenset(values)
        return cls([vals] * n)

    @classmethod
    def from_dict(cls, n: int, mapping: Mapping[int, Iterable[int]]) -> "ForbiddenLists":
        return cls([mapping.get(v, ()) for v in range(n)])

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sets[v]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ForbiddenLists):
            return NotImplemented
        return self.sets == other.sets

    __hash__ = None

    def replace(self, v: int, values: Iterable[int]) -> "ForbiddenLists":
        new = list(self.sets)
        new[v] = frozenset(values)
        return ForbiddenLists(new)

    def all_empty(self) -> bool:
        return all(not s for s in self.sets)

    def uniform_values(self) -> frozenset[int] | None:
        """The common set if every vertex has the same one, else None."""
        if not self.sets:
            return frozenset()
        first = self.sets[0]
        return first if all(s == first for s in self.sets) else None

    def validate(self, graph: MultiGraph) -> None:
        if len(self.sets) != graph.n:
            raise OutOfRangeForbiddenError(
                f"lists cover {len(self.sets)} vertices, graph has {graph.n}"
            )
        for v, s in enumerate(self.sets):
            for x in s:
                if not (0 <= x <= graph.degree[v]):
                    raise OutOfRangeForbiddenError(
                        f"vertex {v}: forbidden value {x} outside 0..{graph.degree[v]}"
                    )

    def __repr__(self) -> str:
        return f"ForbiddenLists({[sorted(s) for s in self.sets]})"


def shift_down(values: Iterable[int]) -> frozenset[int]:
    """{i - 1 : i in values, i >= 1}."""
    return frozenset(i - 1 for i in values if i >= 1)


@dataclass(frozen=True)
class Interval:
    """A maximal run lo..hi of values, flagged as hole (forbidden) or home."""

    lo: int
    hi: int
    hole: bool

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


def decompose(d: int, values: frozenset[int]) -> tuple[Interval, ...]:
    """Maximal alternating hole/home intervals covering 0..d."""
    out: list[Interval] = []
    lo = 0
    cur = 0 in values
    for x in range(1, d + 1):
        if (x in values) != cur:
            out.append(Interval(lo, x - 1, cur))
            lo = x
            cur = not cur
    out.append(Interval(lo, d, cur))
    return tuple(out)


def _lasso_list_ok(d: int, values: frozenset[int], strict_ends: bool = False) -> bool:
    """Per-vertex shape under which the lasso search provably succeeds.

    Holes have size at most 2, any home strictly between two holes has size
    at least 3, and each end interval is a hole of size 1 or a home of size
    at least 2 (with strict_ends, only homes of size at least 2 qualify).
    Degree-0 vertices qualify exactly when their list is empty: a hole
    covering the whole range admits no out-degree at all.
    """
    if d == 0:
        return not values
    ivs = decompose(d, values)
    last = len(ivs) - 1
    for i, iv in enumerate(ivs):
        at_end = i == 0 or i == last
        if iv.hole:
            if iv.size > 2:
                return False
            if at_end and iv.size != 1:
                return False
            if at_end and strict_ends:
                return False
        else:
            if at_end:
                if iv.size < 2:
                    return False
            elif iv.size < 3:
                return False
    return True


class IntervalProfile:
    """Hole/home structure of every vertex, with the derived A/B/X sets."""

    __slots__ = ("graph", "lists", "_intervals", "_above", "_below", "_far")

    def __init__(self, graph: MultiGraph, lists: ForbiddenLists):
        lists.validate(graph)
        self.graph = graph
        self.lists = lists
        self._intervals: list[tuple[Interval, ...]] = []
        self._above: list[frozenset[int]] = []
        self._below: list[frozenset[int]] = []
        self._far: list[frozenset[int]] = []
        for v in range(graph.n):
            d = graph.degree[v]
            f = lists[v]
            ivs = decompose(d, f)
            above = frozenset(i for i in range(d + 1) if i not in f and i - 1 in f)
            below = frozenset(i for i in range(d + 1) if i not in f and i + 1 in f)
            far = frozenset(
                i for i in range(d + 1) if i not in f and i not in above and i not in below
            )
            self._intervals.append(ivs)
            self._above.append(above)
            self._below.append(below)
            self._far.append(far)

    def intervals(self, v: int) -> tuple[Interval, ...]:
        return self._intervals[v]

    def holes(self, v: int) -> tuple[Interval, ...]:
        return tuple(iv for iv in self._intervals[v] if iv.hole)

    def homes(self, v: int) -> tuple[Interval, ...]:
        return tuple(iv for iv in self._intervals[v] if not iv.hole)

    def end_intervals(self, v: int) -> tuple[Interval, Interval]:
        """The intervals containing 0 and d(v); they may coincide."""
        ivs = self._intervals[v]
        return ivs[0], ivs[-1]

    def above(self, v: int) -> frozenset[int]:
        """A(v): home values sitting immediately above a hole."""
        return self._above[v]

    def below(self, v: int) -> frozenset[int]:
        """B(v): home values sitting immediately below a hole."""
        return self._below[v]

    def far(self, v: int) -> frozenset[int]:
        """X(v): home values adjacent to no hole."""
        return self._far[v]


@dataclass(frozen=True)
class VertexClassification:
    """Vertices grouped by where their current out-degree lands.

    `above` and `below` may overlap (a home of size one sits immediately
    above one hole and below another); `forbidden` and `far` never overlap
    with anything else.
    """

    forbidden: frozenset[int]
    above: frozenset[int]
    below: frozenset[int]
    far: frozenset[int]


def classify(orientation: Orientation, profile: IntervalProfile) -> VertexClassification:
    """Group vertices by membership of their out-degree in F/A/B/X."""
    forb, above, below, far = [], [], [], []
    lists = profile.lists
    for v in range(profile.graph.n):
        x = orientation.out_degree(v)
        if x in lists[v]:
            forb.append(v)
            continue
        if x in profile.above(v):
            above.append(v)
        if x in profile.below(v):
            below.append(v)
        if x in profile.far(v):
            far.append(v)
    return VertexClassification(frozenset(forb), frozenset(above), frozenset(below), frozenset(far))


# -- hypothesis checks ------------------------------------------------------


def strict_half_bound(
    graph: MultiGraph, lists: ForbiddenLists, allow_isolated_empty: bool = False
) -> bool:
    """True iff |F(v)| < d(v)/2 at every vertex.

    Degree-0 vertices can never satisfy the strict inequality; with
    allow_isolated_empty they pass when their list is empty, which is the
    form solvers use (an isolated vertex always has out-degree 0).
    """
    for v in range(graph.n):
        d = graph.degree[v]
        if d == 0 and allow_isolated_empty:
            if lists[v]:
                return False
            continue
        if 2 * len(lists[v]) >= d:
            return False
    return True


def weak_half_bound(graph: MultiGraph, lists: ForbiddenLists) -> bool:
    """True iff |F(v)| <= d(v)/2 at every vertex."""
    return all(2 * len(lists[v]) <= graph.degree[v] for v in range(graph.n))


def lasso_hypothesis(profile: IntervalProfile, strict_ends: bool = False) -> bool:
    """True iff every vertex has the shape the lasso search is proven on.

    See `_lasso_list_ok`; strict_ends additionally rejects end holes of
    size one, demanding both end intervals be homes of size at least 2.
    """
    g, lists = profile.graph, profile.lists
    return all(_lasso_list_ok(g.degree[v], lists[v], strict_ends) for v in range(g.n))


def end_interval_holes(profile: IntervalProfile) -> bool:
    """True iff every hole contains 0 or d(v), i.e. each vertex has at most
    one home interval."""
    for v in range(profile.graph.n):
        d = profile.graph.degree[v]
        for hole in profile.holes(v):
            if hole.lo != 0 and hole.hi != d:
                return False
    return True


def single_home_hypothesis(profile: IntervalProfile) -> bool:
    """Holes only at the ends of the range and |F(v)| <= d(v)/2 everywhere."""
    return end_interval_holes(profile) and weak_half_bound(profile.graph, profile.lists)
