"""Command-line entry point: ``twocss solve|gen|verify|bench``.

Exit codes: 0 success, 1 verification or ratio check failed, 2 parse or
usage error, 3 infeasible input, 4 internal invariant violation, 5 oracle
budget exceeded with ``--oracle force``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import instances
from .errors import (
    GraphError,
    InfeasibleInputError,
    InvariantViolation,
    MisuseError,
    OracleBudgetExceeded,
    ParseError,
)
from .graph import EdgeSet, Graph, is_feasible
from .local_search import MODES, SolveReport, self_check, solve
from .minimal import ORDERS, is_inclusion_minimal
from .oracle import AUTO_ORACLE_MAX_EDGES, DEFAULT_BUDGET, exact_min, read_certificate, verify_dual

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_INVARIANT, EXIT_BUDGET = range(6)
BENCH_SCHEMA = "twocss.bench/1"
FOUR_THIRDS = Fraction(4, 3)


def _fraction(q: Fraction | None) -> str | None:
    return None if q is None else f"{q.numerator}/{q.denominator}"


def attach_oracle(g: Graph, report: SolveReport, policy: str, budget: int = DEFAULT_BUDGET) -> None:
    """Fill ``report.oracle_opt`` according to ``auto``, ``off`` or ``force``."""
    if policy == "off" or (policy == "auto" and g.m > AUTO_ORACLE_MAX_EDGES):
        report.oracle_status = "off" if policy == "off" else "skipped"
        return
    try:
        report.oracle_opt, _ = exact_min(g, report.mode, budget=budget, incumbent=report.solution)
        report.oracle_status = "exact"
    except OracleBudgetExceeded:
        report.oracle_status = "budget-exceeded"
        if policy == "force":
            raise


def run_solve(g: Graph, mode: str, order: str = "asc", seed: int = 0, oracle: str = "auto",
              budget: int = DEFAULT_BUDGET, depth_cap: int | None = None) -> SolveReport:
    report = solve(g, mode, order=order, seed=seed, depth_cap=depth_cap)
    self_check(g, report)
    attach_oracle(g, report, oracle, budget)
    return report


def _summary(report: SolveReport) -> str:
    lines = [
        f"mode            {report.mode}",
        f"vertices/edges  {report.n} / {report.m}",
        f"cost            {report.cost}",
        f"lower bound     {report.lower_bound_n}",
    ]
    if report.oracle_opt is not None:
        ratio = report.ratio_vs_oracle
        lines.append(f"optimum         {report.oracle_opt}")
        lines.append(f"ratio           {_fraction(ratio)} ({float(ratio):.4f})")
    else:
        lines.append(f"optimum         n/a ({report.oracle_status})")
    lines.append(f"improvements    {report.improvement_count} ({report.process_calls} processes)")
    lines.append(f"order/seed      {report.order} / {report.seed}")
    lines.append(f"runtime         {report.runtime:.3f} s")
    return "\n".join(lines)


def cmd_solve(args: argparse.Namespace) -> int:
    g = instances.read_graph(args.input)
    report = run_solve(g, args.mode, args.order, args.seed, args.oracle, args.budget, args.depth_cap)
    if args.solution_out:
        sub = Graph(g.n, report.solution.pairs())
        instances.write_graph(sub, args.solution_out)
    if args.json:
        print(json.dumps(report.to_dict(include_timing=args.timing), sort_keys=True))
    else:
        print(_summary(report))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "tight":
        g = instances.gen_tight(args.k)
    elif family == "random":
        g = instances.gen_random_2connected(args.n, args.extra, args.seed)
    elif family == "cycle":
        g = instances.gen_cycle(args.n)
    elif family == "complete":
        g = instances.gen_complete(args.n)
    else:
        g = instances.gen_theta(args.a, args.b, args.c)
    text = instances.serialize(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = instances.read_graph(args.input)
    sol = instances.read_graph(args.solution)
    if sol.n != g.n:
        raise MisuseError(f"solution has {sol.n} vertices, input has {g.n}")
    missing = [e for e in sol.edges if not g.has_edge(*e)]
    if missing:
        raise MisuseError(f"solution edges not in input: {missing}")
    f = EdgeSet(g, (g.edge_id(*e) for e in sol.edges))
    feasible = is_feasible(g, f, args.mode)
    out: dict[str, Any] = {
        "mode": args.mode,
        "cost": len(f),
        "feasible": feasible,
        "minimal": feasible and is_inclusion_minimal(g, f, args.mode),
    }
    ok = feasible
    if args.dual:
        cert = read_certificate(g, args.dual)
        dual_ok, objective = verify_dual(g, cert)
        out["dual_feasible"] = dual_ok
        out["dual_objective"] = _fraction(objective)
        if dual_ok:
            # integral solutions have integral cost
            bound = -((-objective.numerator) // objective.denominator)
            out["lower_bound"] = max(bound, 0)
        ok = ok and dual_ok
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        for key, val in out.items():
            print(f"{key:15} {val}")
    return EXIT_OK if ok else EXIT_FAILED


def bench_instances(suite: str, seed: int, count: int | None) -> list[tuple[str, Graph, int | None]]:
    """Named instances of a suite with their known optimum, if any."""
    if suite == "small":
        return [(name, g, None) for name, g in instances.small_suite(count or 300, seed)]
    if suite == "tight":
        return [(f"tight-{k}", instances.gen_tight(k), None) for k in range(1, (count or 4) + 1)]
    rows: list[tuple[str, Graph, int | None]] = [
        (f"cycle-{n}", instances.gen_cycle(n), n) for n in (10, 100, 1000)
    ]
    rows.append(("random-250-750", instances.gen_random_2connected(250, 500, seed), None))
    rows.append(("random-1000-3000", instances.gen_random_2connected(1000, 2000, seed), None))
    return rows


def run_bench(suite: str, seed: int = 2024, count: int | None = None,
              modes: Sequence[str] = MODES) -> dict[str, Any]:
    rows = []
    for name, g, known in bench_instances(suite, seed, count):
        for mode in modes:
            start = time.perf_counter()
            report = solve(g, mode)
            self_check(g, report)
            if known is not None:
                report.oracle_opt, report.oracle_status = known, "known"
            elif suite != "scaling":
                attach_oracle(g, report, "auto")
            rows.append({
                "instance": name,
                "mode": mode,
                "n": g.n,
                "m": g.m,
                "cost": report.cost,
                "opt": report.oracle_opt,
                "oracle_status": report.oracle_status,
                "ratio": report.ratio_vs_oracle,
                "improvements": report.improvement_count,
                "time_s": round(time.perf_counter() - start, 4),
            })
    ratios = [r["ratio"] for r in rows if r["ratio"] is not None]
    violations = [r for r in rows if r["opt"] is not None and 3 * r["cost"] > 4 * r["opt"]]
    return {
        "schema": BENCH_SCHEMA,
        "suite": suite,
        "seed": seed,
        "rows": rows,
        "max_ratio": max(ratios) if ratios else None,
        "mean_ratio": sum(ratios, Fraction(0)) / len(ratios) if ratios else None,
        "rated": len(ratios),
        "unrated": len(rows) - len(ratios),
        "violations": len(violations),
    }


def cmd_bench(args: argparse.Namespace) -> int:
    result = run_bench(args.suite, args.seed, args.count)
    if args.json:
        payload = dict(result)
        payload["rows"] = [{**r, "ratio": _fraction(r["ratio"])} for r in result["rows"]]
        payload["max_ratio"] = _fraction(result["max_ratio"])
        payload["mean_ratio"] = _fraction(result["mean_ratio"])
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{'instance':18} {'mode':6} {'n':>5} {'m':>5} {'cost':>5} {'opt':>5} {'ratio':>7} {'time':>8}")
        for r in result["rows"]:
            opt = "-" if r["opt"] is None else str(r["opt"])
            ratio = "-" if r["ratio"] is None else f"{float(r['ratio']):.4f}"
            print(f"{r['instance']:18} {r['mode']:6} {r['n']:5} {r['m']:5} {r['cost']:5} "
                  f"{opt:>5} {ratio:>7} {r['time_s']:8.3f}")
        if result["max_ratio"] is not None:
            print(f"max ratio  {_fraction(result['max_ratio'])} ({float(result['max_ratio']):.4f})")
            print(f"mean ratio {float(result['mean_ratio']):.4f} over {result['rated']} rated rows")
        print(f"violations of 4/3: {result['violations']}")
    return EXIT_FAILED if result["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twocss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="approximate a minimum 2-ECSS or 2-VCSS")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", choices=ORDERS, default="asc")
    p.add_argument("--oracle", choices=("auto", "off", "force"), default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle search-node budget")
    p.add_argument("--depth-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include runtime in JSON output")
    p.add_argument("--solution-out", help="write the solution as an edge list")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--family", choices=("tight", "random", "cycle", "complete", "theta"), required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a solution and optionally a dual certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True, help="edge-list file of the solution")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--dual")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--suite", choices=("small", "tight", "scaling"), required=True)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--count", type=int, default=None, help="instances in the small/tight suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, GraphError, MisuseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OracleBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
