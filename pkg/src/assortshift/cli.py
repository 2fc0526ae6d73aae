"""Command line interface.

Subcommands: ``stats`` (dataset summary), ``generate`` (synthetic edge
lists), ``attack`` (run one strategy, write rewired graph and trace),
``exact`` (exact solve with solver diagnostics), and ``sweep`` (budget
sweep over strategies, CSV output).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import sweep as sweep_mod
from .edgelist import graph_stats, read_edge_list, write_edge_list
from .errors import AssortshiftError
from .exact import build_exact_problem, solve_exact
from .generators import generate, parse_generator_spec
from .graph import Graph
from .greedy import apply_sequence
from .rewiring import Mode, enumerate_candidates
from .sweep import (
    STRATEGIES,
    SweepRecord,
    pairs_for_fraction,
    run_strategy,
    run_sweep,
    write_records_csv,
)


def _load_input(args) -> Graph:
    if getattr(args, "generate", None):
        spec = parse_generator_spec(args.generate)
        return generate(spec, seed=args.seed)
    if args.input is None:
        raise AssortshiftError("give an edge-list path or --generate SPEC")
    return read_edge_list(args.input)


def _budget(args, g: Graph) -> int:
    if args.pairs is not None:
        return args.pairs
    if args.fraction is not None:
        return pairs_for_fraction(args.fraction, g.edge_count)
    raise AssortshiftError("give a budget with --pairs or --fraction")


def cmd_stats(args) -> int:
    g = read_edge_list(args.input)
    stats = graph_stats(g)
    if args.json:
        print(json.dumps(stats))
    else:
        r = stats["assortativity"]
        r_text = "undefined" if r is None else f"{r:.6f}"
        print(f"nodes {stats['nodes']}  edges {stats['edges']}  "
              f"mean_degree {stats['mean_degree']:.3f}  assortativity {r_text}")
    return 0


def cmd_generate(args) -> int:
    spec = parse_generator_spec(args.spec)
    g = generate(spec, seed=args.seed)
    write_edge_list(g, args.output,
                    header=[f"{args.spec} seed={args.seed}"])
    print(f"wrote {g.node_count} nodes, {g.edge_count} edges to {args.output}")
    return 0


def _write_trace(result, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("step,dp,r\n")
        for step in result.trace:
            fh.write(f"{step.step},{step.dp},{step.r!r}\n")


def cmd_attack(args) -> int:
    g = _load_input(args)
    pairs = _budget(args, g)
    t0 = time.perf_counter()
    result = run_strategy(g, args.strategy, pairs, args.seed,
                          max_candidates=args.max_candidates)
    wall_ms = int((time.perf_counter() - t0) * 1000)
    if args.out:
        write_edge_list(result.graph, args.out,
                        header=[f"{args.strategy} pairs={pairs} seed={args.seed}"])
    if args.trace:
        _write_trace(result, args.trace)
    summary = {
        "strategy": args.strategy,
        "pairs_budget": pairs,
        "pairs_applied": len(result.selected),
        "pool_exhausted": result.pool_exhausted,
        "r_initial": result.initial_r,
        "r_final": result.final_r,
        "dp": result.dp,
        "wall_ms": wall_ms,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"{args.strategy}: applied {summary['pairs_applied']}/{pairs} pairs, "
              f"r {result.initial_r:.6f} -> {result.final_r:.6f}, "
              f"dp {result.dp}, {wall_ms} ms")
    return 0


def cmd_exact(args) -> int:
    g = _load_input(args)
    pairs = _budget(args, g)
    mode = Mode.ASSORTATIVE if args.mode == "assortative" else Mode.DISASSORTATIVE
    pool = enumerate_candidates(g, mode.sign, max_candidates=args.max_candidates)
    problem = build_exact_problem(g, pairs, mode, pool=pool)
    t0 = time.perf_counter()
    solution = solve_exact(problem, node_limit=args.node_limit,
                           time_limit=args.time_limit)
    wall_ms = int((time.perf_counter() - t0) * 1000)
    result = apply_sequence(g, [pool.candidate(i) for i in solution.selected])
    if args.out:
        write_edge_list(result.graph, args.out,
                        header=[f"exact {mode.value} pairs={pairs}"])
    if args.trace:
        _write_trace(result, args.trace)
    summary = {
        "mode": mode.value,
        "pairs_budget": pairs,
        "pairs_selected": len(solution.selected),
        "objective": solution.objective,
        "proven_optimal": solution.proven_optimal,
        "nodes_explored": solution.nodes_explored,
        "pool_size": len(pool),
        "r_initial": result.initial_r,
        "r_final": result.final_r,
        "wall_ms": wall_ms,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        proof = "optimal" if solution.proven_optimal else "incumbent (limit hit)"
        print(f"exact {mode.value}: dp {solution.objective} with "
              f"{len(solution.selected)}/{pairs} pairs ({proof}), "
              f"r {result.initial_r:.6f} -> {result.final_r:.6f}, "
              f"{solution.nodes_explored} nodes, {wall_ms} ms")
    return 0


def cmd_sweep(args) -> int:
    g = _load_input(args)
    strategies = [s.strip() for s in args.strategies.split(",") if s.strip()]
    if args.fractions:
        fractions = [float(f) for f in args.fractions.split(",")]
    else:
        fractions = [round(0.01 * i, 2) for i in range(1, 11)]
    records = run_sweep(g, strategies, fractions, runs=args.runs,
                        master_seed=args.seed,
                        max_candidates=args.max_candidates)
    write_records_csv(records, args.output)
    n_rows = len(records)
    print(f"wrote {n_rows} rows to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assortshift",
        description="Degree-preserving rewiring attacks on the "
                    "assortativity coefficient.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for generators and stochastic strategies")
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--max-candidates", type=int, default=None,
                        help="cap the candidate pool at the strongest N moves")

    p = sub.add_parser("stats", parents=[common],
                       help="print N, M, mean degree, and assortativity")
    p.add_argument("input", help="edge-list file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("generate", parents=[common],
                       help="write a synthetic network as an edge list")
    p.add_argument("spec", help="er:N:M | ws:N:K[:BETA] | ba:N:M_ATTACH")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    budget = argparse.ArgumentParser(add_help=False)
    group = budget.add_mutually_exclusive_group()
    group.add_argument("--pairs", type=int, default=None,
                       help="budget as a number of rewired edge pairs")
    group.add_argument("--fraction", type=float, default=None,
                       help="budget as a fraction f of edges; "
                            "pairs = floor(f*M/2)")

    p = sub.add_parser("attack", parents=[common, budget],
                       help="run one rewiring strategy")
    p.add_argument("input", nargs="?", default=None, help="edge-list file")
    p.add_argument("strategy", choices=STRATEGIES)
    p.add_argument("--generate", metavar="SPEC", default=None,
                   help="generate the input instead of reading a file")
    p.add_argument("--out", default=None, help="write the rewired edge list")
    p.add_argument("--trace", default=None, help="write per-step CSV trace")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("exact", parents=[common, budget],
                       help="exact optimum via branch and bound")
    p.add_argument("input", nargs="?", default=None, help="edge-list file")
    p.add_argument("--generate", metavar="SPEC", default=None)
    p.add_argument("--mode", choices=("assortative", "disassortative"),
                   default="assortative")
    p.add_argument("--node-limit", type=int, default=100_000_000)
    p.add_argument("--time-limit", type=float, default=300.0)
    p.add_argument("--out", default=None)
    p.add_argument("--trace", default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sweep", parents=[common],
                       help="budget sweep over strategies, CSV output")
    p.add_argument("input", nargs="?", default=None, help="edge-list file")
    p.add_argument("--generate", metavar="SPEC", default=None)
    p.add_argument("--strategies", default="gars,gdrs,tars,tdrs,rars,rdrs,dars,ddrs")
    p.add_argument("--fractions", default=None,
                   help="comma list; default 0.01..0.10 step 0.01")
    p.add_argument("--runs", type=int, default=100,
                   help="runs per point for stochastic strategies")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AssortshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
