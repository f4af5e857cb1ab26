"""Ground truth for small instances: exact optima and dual certificates.

``exact_min`` is a depth-first branch-and-bound over edges in ascending id;
``naive_min`` enumerates subsets by size and exists to cross-check it.
Dual certificates for the cut LP are checked in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .errors import InfeasibleInputError, MalformedLineError, MisuseError, OracleBudgetExceeded
from .graph import EdgeSet, Graph, adjacency_of, feasible_adj, is_feasible

DEFAULT_BUDGET = 10**7
AUTO_ORACLE_MAX_EDGES = 22


def degree_lower_bound(g: Graph) -> int:
    """Half the total required degree: every vertex needs two solution edges."""
    return g.n


def exact_min(g: Graph, mode: str = "2ecss", budget: int = DEFAULT_BUDGET,
              incumbent: Iterable[int] | None = None) -> tuple[int, EdgeSet]:
    """Minimum cardinality of a feasible spanning subgraph, with a witness.

    The incumbent defaults to the local-search solution.  Exceeding ``budget``
    search nodes raises ``OracleBudgetExceeded``; an infeasible input raises
    ``InfeasibleInputError``.
    """
    vertex_mode = _vertex_mode(mode)
    if g.n < 3 or not is_feasible(g, range(g.m), mode):
        raise InfeasibleInputError(f"graph admits no {mode} solution")
    if incumbent is None:
        from .local_search import solve

        incumbent = solve(g, mode).solution
    best = sorted(incumbent)
    if not is_feasible(g, best, mode):
        raise MisuseError("incumbent is not feasible")
    if len(best) == degree_lower_bound(g):
        return len(best), EdgeSet(g, best)

    m = g.m
    edges = g.edges
    avail = adjacency_of(g, range(m))  # chosen plus undecided edges
    deg_chosen = [0] * g.n
    chosen: list[int] = []
    state = {"best": best, "nodes": 0}

    def bound() -> int:
        deficit = sum(2 - d for d in deg_chosen if d < 2)
        return len(chosen) + (deficit + 1) // 2

    def chosen_feasible() -> bool:
        if any(d < 2 for d in deg_chosen):
            return False
        return feasible_adj(adjacency_of(g, chosen), vertex_mode)

    def search(i: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise OracleBudgetExceeded(budget, len(state["best"]))
        if bound() >= len(state["best"]):
            return
        if chosen_feasible():
            state["best"] = sorted(chosen)
            return
        if i == m:
            return
        u, v = edges[i]
        # exclude edge i
        if len(avail[u]) > 2 and len(avail[v]) > 2 and feasible_adj(avail, vertex_mode, skip=i):
            del avail[u][v], avail[v][u]
            search(i + 1)
            avail[u][v] = avail[v][u] = i
        # include edge i
        chosen.append(i)
        deg_chosen[u] += 1
        deg_chosen[v] += 1
        search(i + 1)
        chosen.pop()
        deg_chosen[u] -= 1
        deg_chosen[v] -= 1

    search(0)
    return len(state["best"]), EdgeSet(g, state["best"])


def naive_min(g: Graph, mode: str = "2ecss") -> tuple[int, EdgeSet]:
    """Smallest feasible subset by plain enumeration in order of size."""
    _vertex_mode(mode)
    for size in range(degree_lower_bound(g), g.m + 1):
        for subset in combinations(range(g.m), size):
            if is_feasible(g, subset, mode):
                return size, EdgeSet(g, subset)
    raise InfeasibleInputError(f"graph admits no {mode} solution")


def _vertex_mode(mode: str) -> bool:
    if mode == "2vcss":
        return True
    if mode == "2ecss":
        return False
    raise ValueError(f"unknown mode {mode!r}")


# -- dual certificates ---------------------------------------------------------

@dataclass
class DualCertificate:
    """Sparse dual of the cut LP: ``y`` on vertex sets, ``z`` on edge ids."""

    y: dict[frozenset[int], Fraction] = field(default_factory=dict)
    z: dict[int, Fraction] = field(default_factory=dict)

    def objective(self) -> Fraction:
        return 2 * sum(self.y.values(), Fraction(0)) - sum(self.z.values(), Fraction(0))


def singleton_certificate(g: Graph, value: Fraction = Fraction(1, 2)) -> DualCertificate:
    return DualCertificate(y={frozenset([v]): Fraction(value) for v in range(g.n)})


def verify_dual(g: Graph, cert: DualCertificate) -> tuple[bool, Fraction]:
    """Check every edge constraint exactly and return ``(feasible, objective)``.

    Feasible means ``sum of y_S over sets S cut by e <= 1 + z_e`` for every
    edge ``e``.  A feasible objective is a lower bound on the optimum.
    """
    for s, val in cert.y.items():
        if not s or len(s) >= g.n or any(not 0 <= v < g.n for v in s):
            raise MisuseError(f"dual set {sorted(s)} is not a proper non-empty vertex subset")
        if val < 0:
            raise MisuseError(f"negative dual value on set {sorted(s)}")
    for e, val in cert.z.items():
        if not 0 <= e < g.m:
            raise MisuseError(f"edge id {e} out of range")
        if val < 0:
            raise MisuseError(f"negative dual value on edge {e}")
    feasible = True
    for e, (u, v) in enumerate(g.edges):
        load = sum((val for s, val in cert.y.items() if (u in s) != (v in s)), Fraction(0))
        if load > 1 + cert.z.get(e, 0):
            feasible = False
            break
    return feasible, cert.objective()


def parse_certificate(g: Graph, text: str) -> DualCertificate:
    """Read ``y v1,v2,...,vk p/q`` and ``z u v p/q`` lines; ``#`` starts a comment."""
    cert = DualCertificate()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "y" and len(fields) == 3:
                s = frozenset(int(t) for t in fields[1].split(","))
                cert.y[s] = cert.y.get(s, Fraction(0)) + _rational(fields[2])
            elif fields[0] == "z" and len(fields) == 4:
                e = g.edge_id(int(fields[1]), int(fields[2]))
                cert.z[e] = cert.z.get(e, Fraction(0)) + _rational(fields[3])
            else:
                raise ValueError
        except KeyError:
            raise MalformedLineError(f"z entry names a non-edge: {line!r}", lineno) from None
        except ValueError:
            raise MalformedLineError(f"cannot read certificate line {line!r}", lineno) from None
    return cert


def _rational(token: str) -> Fraction:
    num, _, den = token.partition("/")
    if not num.lstrip("-").isdigit() or (den and not den.isdigit()):
        raise ValueError(token)
    return Fraction(int(num), int(den) if den else 1)


def format_certificate(g: Graph, cert: DualCertificate) -> str:
    lines = []
    for s in sorted(cert.y, key=lambda s: (len(s), sorted(s))):
        val = cert.y[s]
        lines.append(f"y {','.join(map(str, sorted(s)))} {val.numerator}/{val.denominator}")
    for e in sorted(cert.z):
        u, v = g.edges[e]
        val = cert.z[e]
        lines.append(f"z {u} {v} {val.numerator}/{val.denominator}")
    return "\n".join(lines) + "\n"


def read_certificate(g: Graph, path: str | Path) -> DualCertificate:
    return parse_certificate(g, Path(path).read_text())
