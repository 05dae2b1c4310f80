"""Text instance files: graph, lists, optional decomposition and orientation.

Format (whitespace separated, line oriented; blank lines and '#' comments
are ignored):

    n m
    u v                  (m edge lines, defining edge indices 0..m-1)
    v k f1 ... fk        (any number of forbidden-list lines)
    decomposition        (optional section: two lines of edge indices,
    i1 i2 ...             '-' for an empty side)
    j1 j2 ...
    orientation          (optional section: m lines "tail head" in edge
    t h                   index order)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .graph import MultiGraph, Orientation
from .lists import ForbiddenLists


@dataclass
class Instance:
    graph: MultiGraph
    lists: ForbiddenLists
    decomposition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    orientation: Orientation | None = None


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(no: int, line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(no, f"expected integers for {what}, got {line!r}") from None


def parse_instance(text: str) -> Instance:
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError(1, "empty instance")
    pos = 0

    no, header = lines[pos]
    pos += 1
    nums = _ints(no, header, "the 'n m' header")
    if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
        raise ParseError(no, f"header must be 'n m' with nonnegative values, got {header!r}")
    n, m = nums

    pairs = []
    for _ in range(m):
        if pos >= len(lines):
            raise ParseError(lines[-1][0], f"expected {m} edge lines, found {len(pairs)}")
        no, line = lines[pos]
        pos += 1
        nums = _ints(no, line, "an edge")
        if len(nums) != 2:
            raise ParseError(no, f"edge line must be 'u v', got {line!r}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(no, f"edge endpoint out of range 0..{n - 1}: {line!r}")
        if u == v:
            raise ParseError(no, f"loop edge at vertex {u}")
        pairs.append((u, v))
    graph = MultiGraph(n, pairs)

    sets: dict[int, set[int]] = {}
    decomposition = None
    orientation = None
    while pos < len(lines):
        no, line = lines[pos]
        if line == "decomposition":
            pos += 1
            decomposition, pos = _parse_decomposition_lines(lines, pos, graph)
        elif line == "orientation":
            pos += 1
            orientation, pos = _parse_orientation_lines(lines, pos, graph)
        else:
            pos += 1
            nums = _ints(no, line, "a forbidden list")
            if len(nums) < 2:
                raise ParseError(no, f"list line must be 'v k f1 ... fk', got {line!r}")
            v, k, values = nums[0], nums[1], nums[2:]
            if not 0 <= v < n:
                raise ParseError(no, f"list vertex {v} out of range")
            if k != len(values):
                raise ParseError(no, f"list for vertex {v} announces {k} values, has {len(values)}")
            if v in sets:
                raise ParseError(no, f"duplicate list line for vertex {v}")
            for x in values:
                if not 0 <= x <= graph.degree[v]:
                    raise ParseError(
                        no, f"forbidden value {x} outside 0..{graph.degree[v]} at vertex {v}"
                    )
            sets[v] = set(values)
    lists = ForbiddenLists.from_dict(n, sets)
    return Instance(graph, lists, decomposition, orientation)


def _parse_id_line(no: int, line: str, m: int) -> tuple[int, ...]:
    if line == "-":
        return ()
    ids = _ints(no, line, "edge indices")
    for e in ids:
        if not 0 <= e < m:
            raise ParseError(no, f"edge index {e} out of range 0..{m - 1}")
    return tuple(ids)


def _parse_decomposition_lines(lines, pos, graph):
    if pos + 1 >= len(lines):
        raise ParseError(lines[-1][0], "decomposition section needs two lines of edge indices")
    no1, line1 = lines[pos]
    no2, line2 = lines[pos + 1]
    bip = _parse_id_line(no1, line1, graph.m)
    sparse = _parse_id_line(no2, line2, graph.m)
    if sorted(bip + sparse) != list(range(graph.m)):
        raise ParseError(no2, "decomposition lines do not partition the edge indices")
    return (bip, sparse), pos + 2


def _parse_orientation_lines(lines, pos, graph):
    toward = []
    for e in range(graph.m):
        if pos >= len(lines):
            raise ParseError(lines[-1][0], f"orientation section needs {graph.m} lines")
        no, line = lines[pos]
        pos += 1
        nums = _ints(no, line, "an oriented edge")
        if len(nums) != 2:
            raise ParseError(no, f"orientation line must be 'tail head', got {line!r}")
        tail, head = nums
        u, v = graph.edges[e]
        if (tail, head) == (u, v):
            toward.append(True)
        elif (tail, head) == (v, u):
            toward.append(False)
        else:
            raise ParseError(no, f"line {tail} {head} does not orient edge {e} = ({u}, {v})")
    return Orientation(graph, toward), pos


def parse_decomposition_file(text: str, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A standalone decomposition file: two lines of edge indices."""
    lines = _meaningful_lines(text)
    if len(lines) != 2:
        raise ParseError(lines[-1][0] if lines else 1, "expected exactly two lines of edge indices")
    bip = _parse_id_line(lines[0][0], lines[0][1], m)
    sparse = _parse_id_line(lines[1][0], lines[1][1], m)
    if sorted(bip + sparse) != list(range(m)):
        raise ParseError(lines[1][0], "decomposition lines do not partition the edge indices")
    return bip, sparse


def emit_instance(inst: Instance) -> str:
    """Canonical text form; `parse_instance` inverts it exactly."""
    g = inst.graph
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    for v in range(g.n):
        values = sorted(inst.lists[v])
        if values:
            out.append(f"{v} {len(values)} " + " ".join(map(str, values)))
    if inst.decomposition is not None:
        bip, sparse = inst.decomposition
        out.append("decomposition")
        out.append(" ".join(map(str, bip)) if bip else "-")
        out.append(" ".join(map(str, sparse)) if sparse else "-")
    if inst.orientation is not None:
        out.append("orientation")
        out.extend(
            f"{inst.orientation.tail(e)} {inst.orientation.head(e)}" for e in range(g.m)
        )
    return "\n".join(out) + "\n"


def load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(inst: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_instance(inst))
