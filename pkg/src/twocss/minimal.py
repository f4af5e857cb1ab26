"""Greedy reverse-delete to inclusion-wise minimal solutions."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MisuseError
from .graph import EdgeSet, Graph, adjacency_of, feasible_adj
from .rng import SplitMix64

ORDERS = ("asc", "shuffled")


def deletion_order(g: Graph, kind: str = "asc", seed: int = 0) -> list[int]:
    """Edge ids in the sequence a deletion scan should try them."""
    ids = list(range(g.m))
    if kind == "shuffled":
        SplitMix64(seed).shuffle(ids)
    elif kind != "asc":
        raise ValueError(f"unknown deletion order {kind!r}; expected one of {ORDERS}")
    return ids


def deletion_pass(g: Graph, f: Iterable[int], protected: Iterable[int] = (),
                  order: Sequence[int] | None = None, mode: str = "vertex") -> EdgeSet:
    """Delete edges of ``f`` one at a time while the result stays feasible.

    Unprotected edges are scanned before protected ones, each group in
    ``order`` (ascending id by default).  Feasibility is 2-connectivity for
    ``mode="vertex"`` and 2-edge-connectivity for ``mode="edge"``.

    One scan is enough for minimality: both properties are monotone under
    edge deletion, so an edge that could not be removed earlier can never
    become removable after further deletions.
    """
    vertex_mode = mode in ("vertex", "2vcss")
    if not vertex_mode and mode not in ("edge", "2ecss"):
        raise ValueError(f"unknown mode {mode!r}")
    current = set(f)
    adj = adjacency_of(g, current)
    if not feasible_adj(adj, vertex_mode):
        raise MisuseError("deletion_pass needs a feasible starting solution")
    keep_last = set(protected) & current
    if order is None:
        ranked = sorted(current)
    else:
        rank = {e: i for i, e in enumerate(order)}
        ranked = sorted(current, key=rank.__getitem__)
    scan = [e for e in ranked if e not in keep_last] + [e for e in ranked if e in keep_last]
    _scan_delete(g, adj, current, scan, vertex_mode)
    return EdgeSet(g, current)


def _scan_delete(g: Graph, adj, current: set[int], scan: Iterable[int], vertex_mode: bool) -> int:
    removed = 0
    edges = g.edges
    for e in scan:
        u, v = edges[e]
        if len(adj[u]) < 3 or len(adj[v]) < 3:
            continue
        if feasible_adj(adj, vertex_mode, skip=e):
            del adj[u][v]
            del adj[v][u]
            current.discard(e)
            removed += 1
    return removed


def minimal_2vcss(g: Graph, order: Sequence[int] | None = None) -> EdgeSet:
    """Inclusion-wise minimal 2-connected spanning subgraph of a 2-connected ``g``."""
    if g.n < 3:
        raise MisuseError(f"need at least 3 vertices, got {g.n}")
    adj = adjacency_of(g, range(g.m))
    if not feasible_adj(adj, True):
        raise MisuseError("input graph is not 2-connected")
    return deletion_pass(g, range(g.m), order=order)


def is_inclusion_minimal(g: Graph, f: Iterable[int], mode: str = "vertex") -> bool:
    """True when ``f`` is feasible and no single edge can be dropped."""
    vertex_mode = mode in ("vertex", "2vcss")
    f = set(f)
    adj = adjacency_of(g, f)
    if not feasible_adj(adj, vertex_mode):
        return False
    return not any(feasible_adj(adj, vertex_mode, skip=e) for e in f)
