"""Recursive local search for 2-edge- and 2-vertex-connected spanning subgraphs.

The solver starts from an inclusion-wise minimal 2-connected spanning
subgraph and repeatedly runs an *improvement process* on internal vertices
of strong short segments.  A process at vertex ``u`` first tries every
critical edge set (one or two non-solution edges at ``u``): the set is added
and the old edges are reverse-deleted ahead of the new ones, and the swap is
kept when the solution shrinks.  Failing that, it adds each critical set in
turn and recurses on the strong short segments that only exist after the
addition.  A success deeper down is committed by one more reverse-delete.
Every (segment, internal vertex) pair gets at most one process per run.

For 2-edge-connectivity the 2-connected result is cleaned of redundant
trivial edges, and closed short segments are swapped away at equal cost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Sequence

from .errors import InfeasibleInputError, InvariantViolation, MisuseError
from .graph import EdgeSet, Graph, adjacency_of, blocks, feasible_adj, is_2ecss, is_2vcss
from .minimal import _scan_delete, deletion_order, deletion_pass, is_inclusion_minimal, minimal_2vcss
from .segments import Segment, decompose, decompose_adj, is_strong_adj

MODES = ("2ecss", "2vcss")
SCHEMA = "twocss.solve-report/1"

MemoKey = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class CriticalEdgeSet:
    pivot: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if len(self.edges) not in (1, 2):
            raise ValueError("a critical edge set holds one or two edges")


@dataclass
class SolveReport:
    mode: str
    n: int
    m: int
    solution: EdgeSet
    lower_bound_n: int
    improvements: list[tuple[int, int]] = field(default_factory=list)
    process_calls: int = 0
    seed: int = 0
    order: str = "asc"
    runtime: float = 0.0
    oracle_opt: int | None = None
    oracle_status: str = "off"

    @property
    def cost(self) -> int:
        return len(self.solution)

    @property
    def improvement_count(self) -> int:
        return len(self.improvements)

    @property
    def ratio_vs_oracle(self) -> Fraction | None:
        if self.oracle_opt is None:
            return None
        return Fraction(self.cost, self.oracle_opt)

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        ratio = self.ratio_vs_oracle
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "cost": self.cost,
            "lower_bound_n": self.lower_bound_n,
            "oracle_opt": self.oracle_opt,
            "oracle_status": self.oracle_status,
            "ratio_vs_oracle": None if ratio is None else f"{ratio.numerator}/{ratio.denominator}",
            "improvement_count": self.improvement_count,
            "improvements": [list(p) for p in self.improvements],
            "process_calls": self.process_calls,
            "seed": self.seed,
            "order": self.order,
            "solution": [list(p) for p in self.solution.pairs()],
        }
        if include_timing:
            out["runtime_s"] = round(self.runtime, 6)
        return out


def critical_edge_sets(g: Graph, f: Iterable[int] | set[int], u: int) -> list[CriticalEdgeSet]:
    """Singletons in ascending id, then pairs in lexicographic id order."""
    f = f if isinstance(f, (set, frozenset, EdgeSet)) else set(f)
    free = [e for _, e in g.adjacency[u] if e not in f]
    out = [CriticalEdgeSet(u, (e,)) for e in free]
    out.extend(CriticalEdgeSet(u, pair) for pair in combinations(free, 2))
    return out


class _Search:
    """State of one top-level run: the memo and the scan order."""

    def __init__(self, g: Graph, order: Sequence[int] | None = None, depth_cap: int | None = None):
        self.g = g
        self.rank = list(range(g.m))
        if order is not None:
            for i, e in enumerate(order):
                self.rank[e] = i
        self.depth_cap = depth_cap
        self.memo: set[MemoKey] = set()
        self.calls = 0

    def reverse_delete(self, f: set[int], protected: set[int]) -> set[int]:
        """Deletion operation: scan ``f - protected`` first, then ``protected``."""
        current = set(f)
        adj = adjacency_of(self.g, current)
        rank = self.rank.__getitem__
        scan = sorted(current - protected, key=rank) + sorted(protected & current, key=rank)
        _scan_delete(self.g, adj, current, scan, True)
        return current

    def try_improvement(self, f: frozenset[int], added: tuple[int, ...]) -> frozenset[int] | None:
        result = self.reverse_delete(f | set(added), set(added))
        if len(result) < len(f):
            return frozenset(result)
        return None

    def process(self, f: frozenset[int], s: Segment, u: int, depth: int = 0) -> tuple[frozenset[int], bool]:
        self.memo.add((s.key, u))
        self.calls += 1
        options = critical_edge_sets(self.g, f, u)
        for crit in options:
            better = self.try_improvement(f, crit.edges)
            if better is not None:
                return better, True
        if self.depth_cap is not None and depth >= self.depth_cap:
            return f, False
        known = {seg.key for seg in decompose_adj(adjacency_of(self.g, f))}
        for crit in options:
            grown = f | frozenset(crit.edges)
            adj = adjacency_of(self.g, grown)
            for t in decompose_adj(adj):
                if not t.is_short or t.key in known:
                    continue
                if not is_strong_adj(adj, t, True):
                    continue
                for v in sorted(t.internal):
                    if (t.key, v) in self.memo:
                        continue
                    sub, ok = self.process(grown, t, v, depth + 1)
                    if not ok:
                        continue
                    result = self.reverse_delete(set(sub), set(sub) - f)
                    if len(result) < len(f):
                        return frozenset(result), True
        return f, False


def try_improvement(g: Graph, f: Iterable[int], crit: CriticalEdgeSet,
                    order: Sequence[int] | None = None) -> EdgeSet | None:
    """Add ``crit`` to ``f`` and reverse-delete; the result if it is smaller."""
    f = frozenset(f)
    if any(e in f for e in crit.edges):
        raise MisuseError("critical edges must lie outside the solution")
    better = _Search(g, order).try_improvement(f, crit.edges)
    return None if better is None else EdgeSet(g, better)


def improvement_process(g: Graph, f: Iterable[int], s: Segment, u: int, memo: set[MemoKey] | None = None,
                        depth_cap: int | None = None,
                        order: Sequence[int] | None = None) -> tuple[EdgeSet, bool]:
    """Run one improvement process at internal vertex ``u`` of segment ``s``.

    ``memo`` is updated in place with every (segment key, vertex) pair the
    process visits.  On failure the input solution is returned unchanged.
    """
    search = _Search(g, order, depth_cap)
    if memo is not None:
        search.memo = memo
    result, ok = search.process(frozenset(f), s, u)
    return EdgeSet(g, result), ok


def cleanup_2ecss(g: Graph, f: Iterable[int]) -> EdgeSet:
    """Drop redundant trivial edges, smallest id first, until none is left.

    Repeatedly removing the smallest redundant edge equals one ascending scan:
    an edge that is not redundant stays so once other edges are gone.
    """
    return deletion_pass(g, f, mode="edge")


def eliminate_closed_short_segments(g: Graph, f: Iterable[int]) -> EdgeSet:
    """Swap away every closed short segment at equal cost.

    For a closed segment through ``v`` with internal vertex ``u`` the edge
    ``(u, v)`` is traded for the smallest-id non-solution edge ``(u, w)`` that
    keeps the solution 2-edge-connected.
    """
    current = set(f)
    while True:
        closed = [s for s in decompose(g, current) if s.closed and s.is_short]
        if not closed:
            return EdgeSet(g, current)
        s = closed[0]
        v = s.end_a
        options = []
        for u in s.internal:
            if not g.has_edge(u, v):
                continue
            old = g.edge_id(u, v)
            if old not in current:
                continue
            for w, e in g.adjacency[u]:
                if e not in current and w != v:
                    options.append((e, old))
        for new, old in sorted(options):
            trial = (current - {old}) | {new}
            if is_2ecss(g, trial):
                current = trial
                break
        else:
            raise InvariantViolation(f"no swap edge for closed short segment {s.vertices}")


def _improve(g: Graph, order: Sequence[int] | None, depth_cap: int | None,
             report: SolveReport) -> frozenset[int]:
    f = frozenset(minimal_2vcss(g, order))
    search = _Search(g, order, depth_cap)
    while True:
        dec = decompose(g, f)
        if dec.whole_cycle:
            break
        adj = adjacency_of(g, f)
        improved = False
        for s in dec:
            if not s.is_short:
                continue
            if s.closed:
                raise InvariantViolation(f"closed segment {s.vertices} in a 2-connected solution")
            if all((s.key, u) in search.memo for u in s.internal):
                continue
            if not is_strong_adj(adj, s, True):
                continue
            for u in sorted(s.internal):
                if (s.key, u) in search.memo:
                    continue
                better, ok = search.process(f, s, u)
                if ok:
                    if len(better) >= len(f):
                        raise InvariantViolation("accepted improvement did not shrink the solution")
                    report.improvements.append((len(f), len(better)))
                    f = better
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    report.process_calls += search.calls
    return f


def _finish_2ecss(g: Graph, f: Iterable[int]) -> frozenset[int]:
    current = frozenset(cleanup_2ecss(g, f))
    while True:
        swapped = frozenset(eliminate_closed_short_segments(g, current))
        if swapped == current:
            return current
        current = frozenset(cleanup_2ecss(g, swapped))


def _solve_biconnected(g: Graph, mode: str, order: Sequence[int] | None, depth_cap: int | None,
                       report: SolveReport) -> frozenset[int]:
    f = _improve(g, order, depth_cap, report)
    if mode == "2ecss":
        f = _finish_2ecss(g, f)
    return f


def solve(g: Graph, mode: str = "2ecss", order: str = "asc", seed: int = 0,
          depth_cap: int | None = None) -> SolveReport:
    """Approximate a minimum 2-ECSS or 2-VCSS of ``g``.

    ``order`` is ``"asc"`` or ``"shuffled"`` (seeded by ``seed``) and fixes
    the scan order of every reverse-delete.  For ``"2ecss"`` a graph that is
    2-edge-connected but not 2-connected is solved block by block.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if g.n < 3:
        raise InfeasibleInputError(f"need at least 3 vertices, got {g.n}")
    start = time.perf_counter()
    sequence = deletion_order(g, order, seed)
    report = SolveReport(mode=mode, n=g.n, m=g.m, solution=EdgeSet(g), lower_bound_n=g.n,
                         seed=seed, order=order)
    if is_2vcss(g, range(g.m)):
        f = _solve_biconnected(g, mode, sequence, depth_cap, report)
    elif mode == "2vcss":
        raise InfeasibleInputError("input graph is not 2-connected")
    elif not is_2ecss(g, range(g.m)):
        raise InfeasibleInputError("input graph is not 2-edge-connected")
    else:
        rank = {e: i for i, e in enumerate(sequence)}
        chosen: set[int] = set()
        for block in blocks(g):
            sub, _, emap = g.subgraph(block.vertices, block.edges)
            local = {e: i for i, e in enumerate(emap)}
            sub_order = [local[e] for e in sorted(emap, key=rank.__getitem__)]
            part = _solve_biconnected(sub, mode, sub_order, depth_cap, report)
            chosen.update(emap[e] for e in part)
        f = frozenset(chosen)
    report.solution = EdgeSet(g, f)
    report.runtime = time.perf_counter() - start
    return report


def self_check(g: Graph, report: SolveReport) -> None:
    """Raise ``InvariantViolation`` unless the reported solution is feasible and minimal."""
    f = report.solution
    feasible = is_2vcss(g, f) if report.mode == "2vcss" else is_2ecss(g, f)
    if not feasible:
        raise InvariantViolation(f"solution is not a {report.mode}")
    if not is_inclusion_minimal(g, f, report.mode):
        raise InvariantViolation("solution is not inclusion-wise minimal")
    for before, after in report.improvements:
        if after >= before:
            raise InvariantViolation(f"improvement {before} -> {after} did not shrink the solution")
