"""Immutable simple graphs, edge subsets and connectivity primitives.

Vertices are the integers ``0..n-1`` and edges carry dense ids ``0..m-1`` in
the order they were given.  Every routine iterates in ascending id order so
results are reproducible run to run.

Connectivity is recomputed from scratch on every query with an iterative
low-point DFS; nothing is maintained incrementally.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import GraphError, MisuseError

Edge = tuple[int, int]


class Graph:
    """Undirected simple graph with stable edge ids."""

    __slots__ = ("n", "edges", "adjacency", "_index")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normalized: list[Edge] = []
        index: dict[Edge, int] = {}
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"parallel edge {key}")
            index[key] = eid
            normalized.append(key)
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(sorted(nbrs, key=lambda t: t[1])) for nbrs in adjacency
        )
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge ``{u, v}``; raises ``KeyError`` if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def all_edges(self) -> "EdgeSet":
        return EdgeSet(self, range(self.m))

    def edge_set(self, ids: Iterable[int]) -> "EdgeSet":
        return EdgeSet(self, ids)

    def subgraph(self, vertices: Iterable[int], ids: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Relabel an edge subset on a vertex subset to a fresh graph.

        Returns ``(graph, vertex_map, edge_map)`` where the maps send new ids
        back to ids of ``self``.  Edge order follows ascending original id.
        """
        vmap = sorted(set(vertices))
        inverse = {v: i for i, v in enumerate(vmap)}
        emap = sorted(set(ids))
        edges = [(inverse[self.edges[e][0]], inverse[self.edges[e][1]]) for e in emap]
        return Graph(len(vmap), edges), vmap, emap

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class EdgeSet:
    """A subset of a graph's edge ids.

    Membership is O(1) and iteration is always in ascending edge-id order.
    """

    __slots__ = ("graph", "_ids", "_sorted")

    def __init__(self, graph: Graph, ids: Iterable[int] = ()):
        ids = frozenset(ids)
        m = graph.m
        for e in ids:
            if not 0 <= e < m:
                raise GraphError(f"edge id {e} not in graph with {m} edges")
        self.graph = graph
        self._ids = ids
        self._sorted: tuple[int, ...] | None = None

    @property
    def ids(self) -> frozenset[int]:
        return self._ids

    def sorted_ids(self) -> tuple[int, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._ids))
        return self._sorted

    def pairs(self) -> list[Edge]:
        edges = self.graph.edges
        return [edges[e] for e in self.sorted_ids()]

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_ids())

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, e: object) -> bool:
        return e in self._ids

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EdgeSet):
            return self.graph is other.graph and self._ids == other._ids
        if isinstance(other, (set, frozenset)):
            return self._ids == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._ids)

    def __or__(self, other: Iterable[int]) -> "EdgeSet":
        return EdgeSet(self.graph, self._ids | frozenset(other))

    def __sub__(self, other: Iterable[int]) -> "EdgeSet":
        return EdgeSet(self.graph, self._ids - frozenset(other))

    def __repr__(self) -> str:
        return f"EdgeSet({list(self.sorted_ids())})"


class Block(NamedTuple):
    vertices: frozenset[int]
    edges: EdgeSet


# -- internal helpers -------------------------------------------------------

Adjacency = list[dict[int, int]]


def adjacency_of(g: Graph, ids: Iterable[int]) -> Adjacency:
    """Mutable ``neighbor -> edge id`` maps for the subgraph ``(V, ids)``."""
    adj: Adjacency = [{} for _ in range(g.n)]
    edges = g.edges
    for e in sorted(ids):
        u, v = edges[e]
        adj[u][v] = e
        adj[v][u] = e
    return adj


def lowpoint_scan(adj: Adjacency, root: int, skip: int = -1, dead: frozenset[int] | set[int] = frozenset(),
                  stop_at_cut: bool = False, stop_at_bridge: bool = False) -> tuple[int, set[int], list[int]]:
    """Iterative Hopcroft-Tarjan DFS from ``root``.

    Edge ``skip`` and vertices in ``dead`` are treated as absent.  Returns the
    number of vertices reached, the cut vertices and the bridge ids of the
    component of ``root``.  With a ``stop_at_*`` flag the scan returns as soon
    as one such witness is found, so the sets are then incomplete.
    """
    disc: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    cuts: set[int] = set()
    bridges: list[int] = []
    root_children = 0
    counter = 1
    stack = [(root, -1, iter(adj[root].items()))]
    while stack:
        v, parent_edge, it = stack[-1]
        descended = False
        for w, e in it:
            if e == parent_edge or e == skip or w in dead:
                continue
            dw = disc.get(w)
            if dw is None:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, e, iter(adj[w].items())))
                descended = True
                break
            if dw < low[v]:
                low[v] = dw
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        lv = low[v]
        if lv < low[p]:
            low[p] = lv
        dp = disc[p]
        if lv > dp:
            bridges.append(parent_edge)
            if stop_at_bridge:
                return counter, cuts, bridges
        if p == root:
            root_children += 1
        elif lv >= dp:
            cuts.add(p)
            if stop_at_cut:
                return counter, cuts, bridges
    if root_children >= 2:
        cuts.add(root)
    return counter, cuts, bridges


def feasible_adj(adj: Adjacency, vertex_mode: bool, skip: int = -1,
                 dead: frozenset[int] | set[int] = frozenset()) -> bool:
    """2-connectivity (``vertex_mode``) or 2-edge-connectivity of ``adj``.

    Only vertices outside ``dead`` count; fewer than three of them is
    infeasible (a simple graph on two vertices has no two parallel edges).
    """
    alive = len(adj) - len(dead)
    if alive < 3:
        return False
    root = 0
    while root in dead:
        root += 1
    reached, cuts, bridges = lowpoint_scan(
        adj, root, skip, dead, stop_at_cut=vertex_mode, stop_at_bridge=not vertex_mode
    )
    if reached != alive:
        return False
    return not cuts if vertex_mode else not bridges


# -- public predicates ------------------------------------------------------

def is_spanning_connected(g: Graph, f: Iterable[int]) -> bool:
    if g.n <= 1:
        return True
    adj = adjacency_of(g, f)
    seen = {0}
    todo = [0]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def find_bridges(g: Graph, f: Iterable[int]) -> EdgeSet:
    """Edges of ``f`` whose removal splits their component of ``(V, f)``."""
    adj = adjacency_of(g, f)
    seen: set[int] = set()
    found: list[int] = []
    for root in range(g.n):
        if root in seen or not adj[root]:
            continue
        _, _, bridges = lowpoint_scan(adj, root)
        found.extend(bridges)
        seen.update(_component(adj, root))
    return EdgeSet(g, found)


def find_cut_vertices(g: Graph, f: Iterable[int]) -> set[int]:
    """Articulation vertices of the connected spanning subgraph ``(V, f)``."""
    f = list(f)
    if not is_spanning_connected(g, f):
        raise MisuseError("find_cut_vertices needs a connected spanning subgraph")
    if g.n <= 2:
        return set()
    _, cuts, _ = lowpoint_scan(adjacency_of(g, f), 0)
    return cuts


def is_2ecss(g: Graph, f: Iterable[int]) -> bool:
    if g.n < 3:
        return False
    return feasible_adj(adjacency_of(g, f), vertex_mode=False)


def is_2vcss(g: Graph, f: Iterable[int]) -> bool:
    if g.n < 3:
        return False
    return feasible_adj(adjacency_of(g, f), vertex_mode=True)


def is_feasible(g: Graph, f: Iterable[int], mode: str) -> bool:
    """Dispatch on ``mode`` (``"2ecss"`` or ``"2vcss"``)."""
    if mode == "2vcss":
        return is_2vcss(g, f)
    if mode == "2ecss":
        return is_2ecss(g, f)
    raise ValueError(f"unknown mode {mode!r}")


def is_biconnected(g: Graph) -> bool:
    return is_2vcss(g, range(g.m))


def blocks(g: Graph) -> list[Block]:
    """Block decomposition of ``g``; isolated vertices belong to no block.

    Blocks are ordered by their smallest edge id.
    """
    adj = adjacency_of(g, range(g.m))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[Block] = []
    for root in range(g.n):
        if root in disc or not adj[root]:
            continue
        disc[root] = low[root] = len(disc)
        edge_stack: list[int] = []
        stack = [(root, -1, iter(adj[root].items()))]
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = len(disc)
                    edge_stack.append(e)
                    stack.append((w, e, iter(adj[w].items())))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                ids: list[int] = []
                while True:
                    e = edge_stack.pop()
                    ids.append(e)
                    if e == parent_edge:
                        break
                verts = frozenset(x for e in ids for x in g.edges[e])
                out.append(Block(verts, EdgeSet(g, ids)))
    out.sort(key=lambda b: b.edges.sorted_ids()[0])
    return out


def _component(adj: Adjacency, root: int) -> set[int]:
    seen = {root}
    todo = [root]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen
