"""Shared fixtures plus brute-force oracles that avoid the library's DFS code."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import pytest

from twocss.graph import Graph
from twocss.rng import SplitMix64
from twocss.segments import Segment, decompose

ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


# -- brute-force connectivity (union-find, no low points) -------------------

def components(n: int, pairs: Iterable[tuple[int, int]], dead: Iterable[int] = ()) -> int:
    dead = set(dead)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        if u in dead or v in dead:
            continue
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n) if v not in dead})


def bf_bridges(g: Graph, f) -> set[int]:
    f = sorted(f)
    base = components(g.n, (g.edges[e] for e in f))
    return {e for e in f if components(g.n, (g.edges[x] for x in f if x != e)) > base}


def bf_cut_vertices(g: Graph, f) -> set[int]:
    pairs = [g.edges[e] for e in f]
    return {v for v in range(g.n) if components(g.n, pairs, dead=[v]) > 1}


def bf_2ecss(n: int, pairs: list[tuple[int, int]]) -> bool:
    if n < 3 or components(n, pairs) != 1:
        return False
    return all(components(n, pairs[:i] + pairs[i + 1:]) == 1 for i in range(len(pairs)))


def bf_2vcss(n: int, pairs: list[tuple[int, int]]) -> bool:
    if n < 3 or components(n, pairs) != 1:
        return False
    return all(components(n, pairs, dead=[v]) == 1 for v in range(n))


def bf_strong(g: Graph, f, s: Segment, vertex_mode: bool) -> bool:
    """Strength by literally deleting the segment and relabelling the rest."""
    gone = set(s.internal)
    keep = [v for v in range(g.n) if v not in gone]
    label = {v: i for i, v in enumerate(keep)}
    pairs = [(label[g.edges[e][0]], label[g.edges[e][1]]) for e in f
             if e not in s.edges and not (set(g.edges[e]) & gone)]
    test = bf_2vcss if vertex_mode else bf_2ecss
    return test(len(keep), pairs)


def pairs_of(g: Graph, f) -> list[tuple[int, int]]:
    return [g.edges[e] for e in sorted(f)]


# -- extra instance families for tests ----------------------------------------

def random_ear_graph(n: int, extra: int, seed: int) -> Graph:
    """2-connected graph built from a cycle by open ears; often non-Hamiltonian."""
    rng = SplitMix64(seed)
    c = 3 + rng.below(max(1, min(n - 2, 4)))
    es = {(min(i, (i + 1) % c), max(i, (i + 1) % c)) for i in range(c)}
    nv = c
    while nv < n:
        a = rng.below(nv)
        b = rng.below(nv - 1)
        b = b + 1 if b >= a else b
        length = min(1 + rng.below(4), n - nv + 1)
        if length == 1:
            es.add((min(a, b), max(a, b)))
            continue
        prev = a
        for _ in range(length - 1):
            es.add((min(prev, nv), max(prev, nv)))
            prev = nv
            nv += 1
        es.add((min(prev, b), max(prev, b)))
    for _ in range(100):
        if extra <= 0:
            break
        a, b = rng.below(n), rng.below(n)
        if a != b and (min(a, b), max(a, b)) not in es:
            es.add((min(a, b), max(a, b)))
            extra -= 1
    return Graph(n, sorted(es))


def random_subgraph(n: int, density_num: int, seed: int, connected: bool) -> tuple[Graph, list[int]]:
    """Random graph on n vertices and a random edge subset of it."""
    rng = SplitMix64(seed)
    es = set()
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            j = order[rng.below(i)]
            es.add((min(order[i], j), max(order[i], j)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.below(10) < density_num:
                es.add((u, v))
    g = Graph(n, sorted(es))
    tree = set()
    if connected:
        # keep a spanning tree so the subset stays connected
        seen = {0}
        adj = {v: [] for v in range(n)}
        for e, (u, v) in enumerate(g.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        stack = [0]
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if y not in seen:
                    seen.add(y)
                    tree.add(e)
                    stack.append(y)
    f = sorted(tree | {e for e in range(g.m) if rng.below(10) < 5})
    return g, f


def segment_certificate(g: Graph, f, strong_of) -> tuple[dict, dict]:
    """Base dual assignment built from a solution's segments.

    3/4 on internal vertices of strong short segments, 1/2 on the middle edge
    of strong 3-segments, 1/2 on internal vertices of long or weak segments.
    """
    y: dict[frozenset[int], Fraction] = {}
    z: dict[int, Fraction] = {}
    for s in decompose(g, f):
        if s.length == 1:
            continue
        strong = strong_of(s)
        if s.is_short and strong:
            for v in s.internal:
                y[frozenset([v])] = Fraction(3, 4)
            if s.length == 3:
                z[s.edges[1]] = Fraction(1, 2)
        else:
            for v in s.internal:
                y[frozenset([v])] = Fraction(1, 2)
    return y, z


# -- named graphs ----------------------------------------------------------------

def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, sorted((min(e), max(e)) for e in outer + spokes + inner))


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@pytest.fixture
def k4() -> Graph:
    from twocss.instances import gen_complete

    return gen_complete(4)
