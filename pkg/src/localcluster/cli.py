"""Command-line interface: convert | cluster | ncp | bench | serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .diffusion import DiffusionParams, run_diffusion
from .graph import (
    EdgeListParseError,
    Graph,
    GraphFormatError,
    build_graph,
    parse_edge_list,
    read_binary,
    write_binary,
)
from .ncp import default_param_grid, run_ncp
from .service import execute_cluster
from .sweep import sweep_parallel, sweep_sequential
from .synth import rand_local_graph

ALGO_FLAGS = {
    "nibble": "nibble",
    "pr-nibble": "pr_nibble_original",
    "pr-nibble-opt": "pr_nibble_optimized",
    "hkpr": "hkpr",
    "rand-hkpr": "rand_hkpr",
}


def _load_graph(path: str) -> Graph:
    if path.endswith(".txt") or path.endswith(".edges"):
        with open(path) as f:
            return build_graph(parse_edge_list(f))
    with open(path, "rb") as f:
        return read_binary(f)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", required=True, choices=sorted(ALGO_FLAGS))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--eps", type=float, default=1e-6)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--T", type=int, default=10, dest="max_iters")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--N", type=int, default=5, dest="degree_or_walks",
                   help="series degree (hkpr) or walk count (rand-hkpr)")
    p.add_argument("--K", type=int, default=10, dest="max_walk_len")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--hkpr-exp-t", action="store_true",
                   help="use the e^t admission threshold instead of e^-t")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--parallel", action="store_true", help="use the parallel kernels")


def _params_from_args(args: argparse.Namespace) -> DiffusionParams:
    algo = ALGO_FLAGS[args.algo]
    return DiffusionParams(
        algorithm=algo,
        seed=args.seed,
        epsilon=args.eps,
        alpha=args.alpha,
        max_iters=args.max_iters,
        t=args.t,
        taylor_degree=args.degree_or_walks if algo == "hkpr" else 5,
        num_walks=args.degree_or_walks if algo == "rand_hkpr" else 1000,
        max_walk_len=args.max_walk_len,
        rng_seed=args.rng_seed,
        hkpr_threshold_uses_exp_t=args.hkpr_exp_t,
    )


def _cmd_convert(args: argparse.Namespace) -> int:
    with open(args.input) as f:
        g = build_graph(parse_edge_list(f))
    with open(args.output, "wb") as f:
        write_binary(g, f)
    print(f"wrote {args.output}: n={g.n}, m={g.m}", file=sys.stderr)
    return 0


def _cmd_cluster(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    params = _params_from_args(args)
    response = execute_cluster(g, params, run_sweep=args.sweep)
    json.dump(response, sys.stdout)
    print()
    return 0


def _cmd_ncp(args: argparse.Namespace) -> int:
    import random

    g = _load_graph(args.graph)
    rng = random.Random(args.rng_seed)
    population = [v for v in range(g.n) if g.degree(v) > 0]
    seeds = rng.sample(population, min(args.seeds, len(population)))
    profile = run_ncp(g, seeds, default_param_grid(), threads=args.threads)
    sys.stdout.write(profile.to_csv())
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.graph:
        g = _load_graph(args.graph)
    else:
        print("generating synthetic local graph ...", file=sys.stderr)
        g = rand_local_graph(args.n, rng_seed=args.rng_seed)
    seed = next(v for v in range(g.n) if g.degree(v) > 0)
    rows = []
    for algo in ("nibble", "pr_nibble_optimized", "hkpr", "rand_hkpr"):
        params = DiffusionParams(algorithm=algo, seed=seed, epsilon=1e-5,
                                 alpha=0.01, max_iters=10, t=2.0, taylor_degree=5,
                                 num_walks=args.walks, rng_seed=args.rng_seed)
        t0 = time.perf_counter()
        seq = run_diffusion(g, params, mode="sequential")
        t1 = time.perf_counter()
        par = run_diffusion(g, params, mode="parallel", threads=args.threads)
        t2 = time.perf_counter()
        rows.append((algo, t1 - t0, t2 - t1, seq.push_count, par.push_count))
    p_vec = run_diffusion(g, DiffusionParams(algorithm="nibble", seed=seed,
                                             epsilon=1e-7, max_iters=10)).p
    t0 = time.perf_counter()
    sweep_sequential(g, p_vec)
    t1 = time.perf_counter()
    sweep_parallel(g, p_vec)
    t2 = time.perf_counter()
    rows.append(("sweep", t1 - t0, t2 - t1, len(p_vec), len(p_vec)))
    print(f"{'kernel':<22}{'seq_s':>10}{'par_s':>10}{'seq_pushes':>12}{'par_pushes':>12}")
    for name, ts, tp, cs, cp in rows:
        print(f"{name:<22}{ts:>10.4f}{tp:>10.4f}{cs:>12}{cp:>12}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    g = _load_graph(args.graph)
    app = create_app(g)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="localcluster")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="edge list -> binary graph")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("cluster", help="run one diffusion + optional sweep")
    p.add_argument("--graph", required=True)
    _add_param_flags(p)
    p.add_argument("--sweep", action="store_true")
    p.set_defaults(fn=_cmd_cluster)

    p = sub.add_parser("ncp", help="network community profile CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(fn=_cmd_ncp)

    p = sub.add_parser("bench", help="sequential vs parallel timing table")
    p.add_argument("--graph")
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--walks", type=int, default=100_000)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--graph", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8400)
    p.set_defaults(fn=_cmd_serve)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (OSError, EdgeListParseError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
