"""Command-line front end.

Exit codes: 0 solution found, 1 no solution, 2 usage or input error,
3 internal failure (e.g. recovery failed).
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
import time
from typing import Optional, Sequence

from . import bench
from .approx import ApproxConfig, approx_min_kpath
from .exact import ExactConfig, bounded_min_kpath_weight, min_kpath_weight
from .exceptions import LimitExceeded, MalformedTree, MinKPathError, ParseError, RangeError
from .io import dumps_report, parse_graph, parse_tree
from .ktree import approx_min_ktree, bounded_min_ktree_weight, min_ktree_weight, recover_tree_vertices
from .oracle import oracle_min_kpath, oracle_min_ktree
from .recover import RecoverConfig, recover_path
from .report import DEFAULT_SEED, SolveReport

EXIT_FOUND, EXIT_NONE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SOLVE_MODES = ("exact", "bounded", "approx", "tree", "tree-approx", "oracle")


def _seed(text: str) -> int:
    if text == "random":
        return secrets.randbits(63)
    return int(text, 0)


def _number(text: str):
    x = float(text)
    return int(x) if x.is_integer() else x


def _common(p: argparse.ArgumentParser):
    p.add_argument("graph", help="graph file ('-' for stdin)")
    p.add_argument("-k", type=int, help="number of path vertices")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="integer seed or 'random'")
    p.add_argument("--reps", type=int, default=60, help="repetitions per solver call")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tree", help="tree pattern file")
    p.add_argument("--recover", action="store_true", help="also report the path/embedding")
    p.add_argument("--M", type=float, dest="M", help="declared weight bound (checked on parse)")
    p.add_argument("--json", action="store_true", help="accepted for symmetry with bench; output is JSON")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null (byte-stable output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minkpath", description="Minimum-weight k-path and k-tree solver")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SOLVE_MODES:
        p = sub.add_parser(name)
        _common(p)
        if name == "bounded":
            p.add_argument("--cap", type=float, required=True, help="weight bound B")
        if name in ("approx", "tree-approx"):
            p.add_argument("--eps", type=float, default=0.1)
    b = sub.add_parser("bench")
    b.add_argument("--mode", choices=("exact", "approx"), default="exact")
    b.add_argument("-k", type=int, nargs="+", default=[6])
    b.add_argument("-n", type=int, default=30)
    b.add_argument("--M", type=_number, nargs="+", default=[10], dest="M")
    b.add_argument("--eps", type=float, nargs="+", default=[0.1])
    b.add_argument("--p", type=float, default=0.5, help="edge probability")
    b.add_argument("--runs", type=int, default=3)
    b.add_argument("--warmup", type=int, default=1, help="untimed calls per cell")
    b.add_argument("--reps", type=int, default=None, help="default 1 (exact) or 60 (approx)")
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--json", action="store_true", help="JSON rows instead of CSV")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _solve(args) -> tuple:
    g = parse_graph(_read(args.graph), M=args.M)
    tree = parse_tree(_read(args.tree)) if args.tree else None
    mode = args.command
    if mode.startswith("tree") and tree is None:
        raise ValueError(f"{mode} needs --tree")
    if tree is not None and args.k is not None and args.k != tree.k:
        raise ValueError(f"-k {args.k} disagrees with the tree's {tree.k} nodes")
    k = tree.k if tree is not None else args.k
    if k is None:
        raise ValueError("-k is required")
    if mode in ("exact", "bounded", "tree") and g.weight_kind == "real":
        raise ValueError(f"{mode} needs integer weights; use approx or tree-approx for reals")
    if mode in ("approx", "tree-approx") and g.m and g.min_weight < 1:
        raise ValueError(f"{mode} needs weights in [1, M]")
    inner = ExactConfig(repetitions=args.reps, seed=args.seed, threads=args.threads)
    rcfg = RecoverConfig(inner=inner)

    if mode == "exact":
        rep = recover_path(g, k, rcfg) if args.recover else min_kpath_weight(g, k, inner)
    elif mode == "bounded":
        if args.recover:
            rep = recover_path(g, k, rcfg, bound=args.cap)
        else:
            rep = bounded_min_kpath_weight(g, k, args.cap, inner)
    elif mode == "approx":
        rep = approx_min_kpath(g, ApproxConfig(k=k, epsilon=args.eps, seed=args.seed, inner=inner))
    elif mode == "tree":
        rep = recover_tree_vertices(g, tree, cfg=rcfg) if args.recover else min_ktree_weight(g, tree, inner)
    elif mode == "tree-approx":
        rep = approx_min_ktree(g, tree, ApproxConfig(k=k, epsilon=args.eps, seed=args.seed, inner=inner))
    else:
        t0 = time.perf_counter()
        rep = SolveReport(seed=args.seed, mode="oracle", k=k)
        if tree is not None:
            res = oracle_min_ktree(g, tree)
            if res is not None:
                rep.weight, rep.embedding = res
        else:
            res = oracle_min_kpath(g, k)
            if res is not None:
                rep.weight, rep.vertices = res
        rep.elapsed = time.perf_counter() - t0
    rep.mode = mode
    text = dumps_report(
        rep,
        args.reps,
        emit_solution=args.recover or mode in ("approx", "tree-approx", "oracle"),
        timing=not args.no_timing,
        tree=tree is not None,
    )
    return rep, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            rows = bench.run_bench(
                mode=args.mode, ks=args.k, n=args.n, Ms=args.M, eps=args.eps,
                p=args.p, runs=args.runs, reps=args.reps, seed=args.seed, warmup=args.warmup,
            )
            print(json.dumps(rows) if args.json else bench.rows_to_csv(rows), end="" if not args.json else "\n")
            return EXIT_FOUND
        rep, text = _solve(args)
    except (ParseError, RangeError, MalformedTree, LimitExceeded, ValueError, OSError) as exc:
        print(f"minkpath: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinKPathError as exc:
        print(f"minkpath: failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(text)
    return EXIT_FOUND if rep.found else EXIT_NONE


if __name__ == "__main__":
    sys.exit(main())
