"""Segments of a feasible solution and their classification.

A plain path is a path whose internal vertices all have degree two in the
solution; a segment is a maximal one, so its ends are high-degree vertices
(degree >= 3).  Segments partition the solution's edges except when the
solution is a single spanning cycle, which has no high-degree vertex at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MisuseError
from .graph import Adjacency, EdgeSet, Graph, adjacency_of, feasible_adj, is_2ecss

TRIVIAL, SHORT, LONG = "trivial", "short", "long"
WEAK, STRONG = "weak", "strong"


@dataclass(frozen=True)
class Segment:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def end_a(self) -> int:
        return self.vertices[0]

    @property
    def end_b(self) -> int:
        return self.vertices[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def is_short(self) -> bool:
        return 2 <= len(self.edges) <= 3

    @property
    def key(self) -> tuple[int, ...]:
        """Structural identity that survives recomputation."""
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class SegmentClass:
    length_class: str
    strength: str
    closed: bool

    @property
    def strong(self) -> bool:
        return self.strength == STRONG


@dataclass(frozen=True)
class Decomposition:
    segments: list[Segment]
    whole_cycle: bool = False

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)


def length_class(length: int) -> str:
    if length == 1:
        return TRIVIAL
    return SHORT if length <= 3 else LONG


def _vertex_mode(mode: str) -> bool:
    if mode in ("vertex", "2vcss"):
        return True
    if mode in ("edge", "2ecss"):
        return False
    raise ValueError(f"unknown mode {mode!r}")


def decompose_adj(adj: Adjacency) -> Decomposition:
    ends = [v for v, nbrs in enumerate(adj) if nbrs and len(nbrs) != 2]
    if not ends:
        return Decomposition([], whole_cycle=True)
    is_end = [False] * len(adj)
    for v in ends:
        is_end[v] = True
    used: set[int] = set()
    out: list[Segment] = []
    for h in ends:
        for w, e in sorted(adj[h].items(), key=lambda t: t[1]):
            if e in used:
                continue
            verts = [h, w]
            path = [e]
            used.add(e)
            prev_edge = e
            while not is_end[w]:
                (a, ea), (b, eb) = adj[w].items()
                w, prev_edge = (b, eb) if ea == prev_edge else (a, ea)
                verts.append(w)
                path.append(prev_edge)
                used.add(prev_edge)
            out.append(Segment(tuple(verts), tuple(path)))
    total = sum(len(nbrs) for nbrs in adj) // 2
    if len(used) != total:
        raise MisuseError("solution has a cycle component without high-degree vertices")
    out.sort(key=lambda s: min(s.edges))
    return Decomposition(out)


def decompose(g: Graph, f: Iterable[int]) -> Decomposition:
    """Split ``f`` into its segments, ordered by smallest contained edge id.

    A solution without high-degree vertices is reported as
    ``Decomposition([], whole_cycle=True)``.
    """
    return decompose_adj(adjacency_of(g, f))


def is_strong_adj(adj: Adjacency, s: Segment, vertex_mode: bool) -> bool:
    # Internal vertices go with the segment; their edges vanish with them.
    internal = set(s.internal)
    skip = s.edges[0] if not internal else -1
    return feasible_adj(adj, vertex_mode, skip=skip, dead=internal)


def classify(g: Graph, f: Iterable[int], s: Segment, mode: str = "vertex") -> SegmentClass:
    """Length class, strength and closedness of segment ``s`` of ``f``.

    ``s`` is strong when deleting its edges and internal vertices leaves a
    feasible solution (2-connected, or 2-edge-connected for ``mode="edge"``)
    on the remaining vertices.
    """
    strong = is_strong_adj(adjacency_of(g, f), s, _vertex_mode(mode))
    return SegmentClass(length_class(s.length), STRONG if strong else WEAK, s.closed)


def redundant_edges(g: Graph, f: Iterable[int]) -> EdgeSet:
    """Trivial-segment edges each individually removable from the 2-ECSS ``f``.

    Redundancy is judged against ``f`` as given, not after earlier removals.
    """
    f = list(f)
    if not is_2ecss(g, f):
        raise MisuseError("redundant_edges needs a 2-edge-connected spanning subgraph")
    adj = adjacency_of(g, f)
    found = []
    for e in f:
        u, v = g.edges[e]
        if len(adj[u]) >= 3 and len(adj[v]) >= 3 and feasible_adj(adj, False, skip=e):
            found.append(e)
    return EdgeSet(g, found)
