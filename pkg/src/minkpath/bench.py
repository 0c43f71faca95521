"""Timing harness for empirical scaling in k, M and 1/eps."""

from __future__ import annotations

import csv
import io
import statistics
import time
from typing import Dict, Iterable, List, Optional

import numpy as np

from .approx import ApproxConfig, approx_min_kpath
from .exact import ExactConfig, min_kpath_weight
from .graph import WeightedGraph, random_graph

FIELDS = ["k", "n", "M", "mode", "eps", "elapsed"]


def bench_instance(n: int, M: float, mode: str, p: float, seed: int) -> WeightedGraph:
    """Directed G(n, p); integer weights in [0, M] (exact) or reals in [1, M] (approx)."""
    rng = np.random.default_rng(seed)
    if mode == "exact":
        return random_graph(n, p, rng, lambda r: int(r.integers(0, int(M) + 1)))
    return random_graph(n, p, rng, lambda r: float(r.uniform(1.0, M)))


def time_once(g: WeightedGraph, k: int, mode: str, eps: Optional[float], reps: int, seed: int) -> float:
    inner = ExactConfig(repetitions=reps, seed=seed)
    t0 = time.perf_counter()
    if mode == "exact":
        min_kpath_weight(g, k, inner)
    else:
        approx_min_kpath(g, ApproxConfig(k=k, epsilon=eps, seed=seed, inner=inner))
    return time.perf_counter() - t0


def run_bench(
    mode: str = "exact",
    ks: Iterable[int] = (6,),
    n: int = 30,
    Ms: Iterable[float] = (10,),
    eps: Iterable[float] = (0.1,),
    p: float = 0.5,
    runs: int = 3,
    reps: Optional[int] = None,
    seed: int = 0,
    warmup: int = 1,
) -> List[Dict]:
    """One row per grid cell; ``elapsed`` is the median over ``runs`` timings (seconds).

    ``warmup`` untimed calls per cell absorb table construction and allocator churn.
    ``reps`` defaults to a single evaluation in exact mode; approx mode needs
    amplified inner calls to recover a path, so it defaults to the solver's 60.
    """
    if reps is None:
        reps = 1 if mode == "exact" else ExactConfig().repetitions
    if mode not in ("exact", "approx"):
        raise ValueError(f"bench mode must be exact or approx, got {mode!r}")
    if runs < 3:
        raise ValueError("each cell needs a median over at least 3 runs")
    rows = []
    eps_grid = list(eps) if mode == "approx" else [None]
    for M in Ms:
        g = bench_instance(n, M, mode, p, seed)
        for k in ks:
            for e in eps_grid:
                for r in range(warmup):
                    time_once(g, k, mode, e, reps, seed - 1 - r)
                times = [time_once(g, k, mode, e, reps, seed + r) for r in range(runs)]
                rows.append({"k": k, "n": n, "M": M, "mode": mode, "eps": e, "elapsed": statistics.median(times)})
    return rows


def rows_to_csv(rows: List[Dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "eps": "" if row["eps"] is None else row["eps"], "elapsed": f"{row['elapsed']:.6f}"})
    return buf.getvalue()
