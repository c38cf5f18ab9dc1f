"""Command-line interface: ``spectral-anneal <command> [flags]``.

Exit codes: 0 success, 2 configuration or parity error, 3 malformed input data.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

import numpy as np

from . import io
from .bounds import bound_set, classify, ramanujan_threshold
from .exceptions import GraphConfigError, MalformedGraph
from .experiments import fraction_below, switch_trajectory
from .graph import diameter, generate_regular_graph
from .mcsa import McsaConfig, coupled_annealing
from .randomize import random_regular_graph
from .spectrum import eigen_histogram, lambda2

EXIT_CONFIG = 2
EXIT_DATA = 3


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().entropy % 2**63)


def _config_error(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_CONFIG


def _fmt(value) -> str:
    return "n/a" if value is None else f"{value:.6f}"


def _print_bounds(bs, out=None) -> None:
    out = out or sys.stdout
    rows = [
        ("ramanujan", bs.ramanujan),
        ("weak_optimal", bs.weak_optimal),
        ("weak_lower", bs.weak_lower),
        ("strict_lower", bs.strict_lower),
    ]
    for name, value in rows:
        print(f"{name:<14}{_fmt(value):>10}", file=out)


def cmd_generate(args) -> int:
    seed = args.seed
    try:
        if args.switches > 0:
            if seed is None:
                seed = _fresh_seed()
            graph, accepted = random_regular_graph(args.n, args.d, args.switches, seed)
        else:
            graph, accepted = generate_regular_graph(args.n, args.d), 0
    except GraphConfigError as exc:
        return _config_error(exc)
    out = args.out or f"regular_{args.n}_{args.d}.csv"
    io.save_adjacency(out, graph)
    print(f"wrote {out}")
    print(f"edges {graph.n_edges}")
    if args.switches > 0:
        print(f"seed {seed}")
        print(f"accepted_switches {accepted}/{args.switches}")
    print(f"lambda2 {lambda2(graph):.10f}")
    return 0


def cmd_spectrum(args) -> int:
    try:
        graph = io.load_adjacency(args.input)
    except (MalformedGraph, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    hist = eigen_histogram(graph, args.bins)
    if args.out:
        io.write_histogram_csv(args.out, hist)
        print(f"wrote {args.out}")
    lam = lambda2(graph)
    m = diameter(graph)
    bs = bound_set(graph.n, graph.d, m)
    cls = classify(lam, bs) if graph.d >= 2 else None
    print(f"n {graph.n}  d {graph.d}  diameter {m}")
    print(f"lambda2 {lam:.10f}")
    _print_bounds(bs)
    if cls is not None:
        print(f"ramanujan {cls.is_ramanujan}  below_weak_optimal {cls.below_weak_optimal}  above_strict {cls.above_strict}")
    return 0


def cmd_bounds(args) -> int:
    if args.d < 2:
        return _config_error(GraphConfigError("d must be at least 2"))
    bs = bound_set(args.n, args.d, args.m)
    _print_bounds(bs)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(asdict(bs), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.json}")
    return 0


def cmd_mcsa(args) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    config = McsaConfig(
        vertices=args.n,
        degree=args.d,
        chains=args.chains,
        min_cooling=args.min_cooling,
        max_cooling=args.max_cooling,
        t_min=args.t_min,
        trials_per_step=args.trials,
        stop_rule=args.stop_at,
        swap_rule=args.swap_rule,
        seed=seed,
        warmup_switches=args.warmup,
        ranking=args.ranking,
        carry=args.carry,
        n_jobs=args.jobs,
        max_steps=args.max_steps,
    )
    try:
        graph, lam, record = coupled_annealing(config)
    except GraphConfigError as exc:
        return _config_error(exc)
    os.makedirs(args.out_dir, exist_ok=True)
    stem = f"mcsa_{args.n}_{args.d}"
    adj_path = os.path.join(args.out_dir, f"{stem}_best.csv")
    run_path = os.path.join(args.out_dir, f"{stem}_run.json")
    trace_path = os.path.join(args.out_dir, f"{stem}_trace.csv")
    io.save_adjacency(adj_path, graph)
    io.save_run_record(run_path, record, adjacency_file=os.path.basename(adj_path))
    io.write_trace_csv(trace_path, record)
    print(f"seed {seed}")
    print(f"stop_reason {record.stop_reason}  steps {record.total_steps}  seconds {record.seconds:.3f}")
    print(f"lambda2 {lam:.10f}  ramanujan_threshold {ramanujan_threshold(args.d):.6f}")
    print(f"wrote {adj_path} {run_path} {trace_path}")
    return 0


def cmd_switch_experiment(args) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    try:
        values = switch_trajectory(args.n, args.d, args.count, seed)
    except GraphConfigError as exc:
        return _config_error(exc)
    threshold = ramanujan_threshold(args.d)
    frac = fraction_below(values, threshold)
    out = args.out or f"switches_{args.n}_{args.d}.csv"
    io.write_lambda_series_csv(out, values)
    switched = values[1:] if args.count else values
    below = int((switched < threshold).sum())
    print(f"seed {seed}")
    print(f"below_ramanujan {below}/{len(switched)} fraction {frac:.4f}")
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectral-anneal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="circulant regular graph, optionally randomized")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--switches", type=int, default=0, help="switch attempts after construction")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("spectrum", help="lambda2, bounds and eigenvalue histogram of an adjacency CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--bins", type=int, default=40)
    p.add_argument("--out", help="histogram CSV path")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", help="spectral thresholds for degree d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, help="vertex count, enables the weak lower bound")
    p.add_argument("--m", type=int, help="diameter, enables the strict lower bound")
    p.add_argument("--json", help="also write the bounds as JSON to this path")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mcsa", help="coupled annealing search for a low-lambda2 graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chains", type=int, default=5)
    p.add_argument("--min-cooling", type=float, default=0.90)
    p.add_argument("--max-cooling", type=float, default=0.99)
    p.add_argument("--t-min", type=float, default=1e-4)
    p.add_argument("--trials", type=int, default=10, help="annealing trials per chain per step")
    p.add_argument("--stop-at", default="none", help="none, ramanujan, weak_optimal or a number")
    p.add_argument("--swap-rule", choices=("unconditional", "metropolis"), default="unconditional")
    p.add_argument("--ranking", choices=("coldest_best", "permute"), default="coldest_best")
    p.add_argument("--carry", choices=("best", "current"), default="best")
    p.add_argument("--warmup", type=int, help="switch attempts per initial graph (default 3|E|)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_mcsa)

    p = sub.add_parser("switch-experiment", help="lambda2 after each of COUNT successive single switches")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=499)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_switch_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphConfigError as exc:
        return _config_error(exc)


if __name__ == "__main__":
    sys.exit(main())
