"""Instance generators and the plain-text edge-list format.

Edge-list format: the first non-comment line is ``n m``, followed by ``m``
lines ``u v``.  Lines starting with ``#`` are ignored.  Edge ids follow line
order, so ``parse(serialize(g)) == g`` with identical ids.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DuplicateEdgeError, GraphError, MalformedLineError, SelfLoopError, VertexRangeError
from .graph import Graph
from .rng import SplitMix64


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"need at least one vertex, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_theta(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by internally disjoint paths of lengths a, b, c."""
    lengths = (a, b, c)
    if min(lengths) < 1:
        raise GraphError("theta path lengths must be at least 1")
    if lengths.count(1) > 1:
        raise GraphError("at most one theta path may be a single edge")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, sorted((min(e), max(e)) for e in edges))


def gen_tight(k: int) -> Graph:
    """Member ``k`` of the tight family for the 4/3 guarantee.

    Hubs 0 and 1 are joined by ``k`` paths ``0 - x_i - y_i - z_i - 1`` with
    ``x_i, y_i, z_i = 3i+2, 3i+3, 3i+4``.  The connectors ``(0, 1)`` and
    ``(z_i, x_{i+1})`` close the Hamiltonian cycle
    ``0 x_0 y_0 z_0 x_1 ... z_{k-1} 1 0`` of length ``3k+2``, which is optimal
    because every vertex needs degree two.

    The connectors get the lowest edge ids.  An ascending reverse-delete
    therefore strips them first (for ``k >= 2`` the paths alone are
    2-connected) and ends at the union of the ``k`` paths: ``4k`` edges made
    of long segments only, where no improvement process ever starts.  For
    ``k = 1`` the graph is the 5-cycle and both costs collapse to 5.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    x = [3 * i + 2 for i in range(k)]
    connectors = [(0, 1)] + [(x[i] + 2, x[i + 1]) for i in range(k - 1)]
    paths = []
    for xi in x:
        paths += [(0, xi), (xi, xi + 1), (xi + 1, xi + 2), (xi + 2, 1)]
    return Graph(3 * k + 2, [(min(e), max(e)) for e in connectors + paths])


def max_extra_edges(n: int) -> int:
    return n * (n - 1) // 2 - n


def gen_random_2connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Seeded Hamiltonian cycle plus ``extra_edges`` distinct random chords.

    The cycle visits a SplitMix64 Fisher-Yates permutation of the vertices;
    chords are drawn by a partial Fisher-Yates over the lexicographically
    sorted non-cycle pairs.  Edges are emitted in lexicographic order.
    """
    if n < 3:
        raise GraphError(f"need n >= 3, got {n}")
    if not 0 <= extra_edges <= max_extra_edges(n):
        raise GraphError(f"extra_edges must be in [0, {max_extra_edges(n)}], got {extra_edges}")
    rng = SplitMix64(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    cycle = {(min(a, b), max(a, b)) for a, b in zip(perm, perm[1:] + perm[:1])}
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in cycle]
    for i in range(extra_edges):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return Graph(n, sorted(cycle | set(pool[:extra_edges])))


# -- edge-list I/O ------------------------------------------------------------

def parse(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise MalformedLineError("missing 'n m' header")
    lineno, head = rows[0]
    n, m = _ints(head, lineno)
    if n < 0 or m < 0:
        raise MalformedLineError("negative header values", lineno)
    body = rows[1:]
    if len(body) != m:
        raise MalformedLineError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, fields in body:
        u, v = _ints(fields, lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _ints(fields: list[str], lineno: int) -> tuple[int, int]:
    if len(fields) != 2:
        raise MalformedLineError(f"expected two integers, got {' '.join(fields)!r}", lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise MalformedLineError(f"expected two integers, got {' '.join(fields)!r}", lineno) from None


def serialize(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize(g))


def small_suite(count: int = 300, seed: int = 2024) -> list[tuple[str, Graph]]:
    """Seeded random 2-connected instances with 5 <= n <= 10 and m <= 20."""
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        n = 5 + rng.below(6)
        extra = rng.below(min(20 - n, max_extra_edges(n)) + 1)
        out.append((f"small-{i:03d}", gen_random_2connected(n, extra, rng.next_u64())))
    return out
