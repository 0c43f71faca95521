"""Recovering an optimal path (or tree vertex set) from a weight-only solver.

Vertices are deleted while the amplified solver keeps answering the optimum
``d``: first in random batches (each vertex dropped with probability 1/k)
while the graph is large, then one at a time.  For paths, the edges among
the final k vertices are pruned the same way until only the path remains.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .exact import ExactConfig, bounded_min_kpath_weight, check_k, min_kpath_weight
from .exceptions import ExtractionFailed, OracleFailure, RecoveryFailed
from .graph import WeightedGraph
from .report import SolveReport

# stream id reserved for the vertex-deletion coin flips
_SHRINK_STREAM = 2**32 + 1


@dataclass(frozen=True)
class RecoverConfig:
    inner: ExactConfig = field(default_factory=ExactConfig)
    retry_rounds: Optional[int] = None  # default ceil(4 ln n) + 8
    removal_prob: Optional[float] = None  # default 1/k
    floor_factor: int = 10  # batch deletion runs while |V| > floor_factor * k
    min_removed_fraction: float = 0.5  # accept a batch only if >= this * |V|/k removed

    def __post_init__(self):
        if self.retry_rounds is not None and self.retry_rounds < 1:
            raise ValueError("retry_rounds must be >= 1")
        if self.removal_prob is not None and not 0 < self.removal_prob < 1:
            raise ValueError("removal_prob must be in (0, 1)")

    def rounds_for(self, n: int) -> int:
        if self.retry_rounds is not None:
            return self.retry_rounds
        return math.ceil(4 * math.log(max(n, 2))) + 8

    def prob_for(self, k: int) -> float:
        return self.removal_prob if self.removal_prob is not None else 1.0 / k


class PathOracle:
    """Amplified k-path weight solver; each call gets its own random stream."""

    def __init__(self, k: int, inner: ExactConfig, bound: Optional[float] = None):
        self.k = k
        self.inner = inner
        self.bound = bound
        self.calls = 0
        self.repetitions = 0

    def solve(self, g: WeightedGraph, cfg: ExactConfig, target) -> SolveReport:
        if self.bound is None:
            return min_kpath_weight(g, self.k, cfg, stop_at=target)
        return bounded_min_kpath_weight(g, self.k, self.bound, cfg, stop_at=target)

    def __call__(self, g: WeightedGraph, target=None):
        self.calls += 1
        rep = self.solve(g, replace(self.inner, stream=self.inner.stream + self.calls), target)
        self.repetitions += rep.repetitions_used
        w = rep.weight
        if target is not None and w is not None and w < target:
            raise OracleFailure(f"subgraph answered {w} below the claimed optimum {target}")
        return w


Oracle = Callable[..., Optional[float]]


def shrink_round(
    g: WeightedGraph, k: int, d, cfg: RecoverConfig, rng: np.random.Generator, oracle: Oracle
) -> Optional[List[int]]:
    """One batch-deletion round; returns the surviving vertices or None if every trial failed."""
    n = g.n
    p = cfg.prob_for(k)
    need = cfg.min_removed_fraction * n / k
    for _ in range(cfg.rounds_for(n)):
        keep = [v for v, coin in zip(range(1, n + 1), rng.random(n)) if coin >= p]
        if n - len(keep) < need or len(keep) < k:
            continue
        sub, _ = g.subgraph(keep)
        if oracle(sub, target=d) == d:
            return keep
    return None


def self_reduce(g: WeightedGraph, k: int, d, oracle: Oracle) -> List[int]:
    """Drop vertices one at a time while the answer stays ``d``; returns the k survivors."""
    alive = list(range(1, g.n + 1))
    for v in range(1, g.n + 1):
        if len(alive) == k:
            break
        trial = [u for u in alive if u != v]
        sub, _ = g.subgraph(trial)
        if oracle(sub, target=d) == d:
            alive = trial
    if len(alive) != k:
        raise OracleFailure(f"self-reduction stalled at {len(alive)} vertices (k={k})")
    return alive


def reduce_vertices(
    g: WeightedGraph, k: int, d, cfg: RecoverConfig, oracle: Oracle, rng: np.random.Generator
) -> List[int]:
    """Labels (in ``g``) of k vertices whose induced subgraph still has optimum ``d``."""
    labels = list(range(1, g.n + 1))
    cur = g
    while cur.n > cfg.floor_factor * k:
        keep = shrink_round(cur, k, d, cfg, rng, oracle)
        if keep is None:
            raise RecoveryFailed(f"no accepted deletion batch at {cur.n} vertices")
        cur, _ = cur.subgraph(keep)
        labels = [labels[v - 1] for v in keep]
    return [labels[v - 1] for v in self_reduce(cur, k, d, oracle)]


def _as_path(g: WeightedGraph, k: int) -> Optional[List[int]]:
    # vertex order if the edge set of g is exactly a Hamiltonian path
    if g.m != k - 1 or any(u == v for u, v, _ in g.edges):
        return None
    if k == 1:
        return [1]
    nxt = {}
    indeg = {v: 0 for v in range(1, g.n + 1)}
    if g.directed:
        for u, v, _ in g.edges:
            if u in nxt:
                return None
            nxt[u] = v
            indeg[v] += 1
        starts = [v for v in indeg if indeg[v] == 0]
    else:
        adj = {v: [] for v in range(1, g.n + 1)}
        for u, v, _ in g.edges:
            adj[u].append(v)
            adj[v].append(u)
        starts = sorted(v for v in adj if len(adj[v]) == 1)
    if not starts:
        return None
    order = [starts[0]]
    seen = {starts[0]}
    while len(order) < k:
        cur = order[-1]
        cands = [nxt[cur]] if g.directed and cur in nxt else ([] if g.directed else adj[cur])
        cands = [c for c in cands if c not in seen]
        if len(cands) != 1:
            return None
        order.append(cands[0])
        seen.add(cands[0])
    return order


def extract_order(g_k: WeightedGraph, k: int, d, oracle: Oracle) -> List[int]:
    """Order the k vertices of ``g_k`` into a path of weight ``d`` by pruning edges."""
    order = _as_path(g_k, k)
    cur = g_k
    i = 0
    while order is None and i < cur.m:
        trial = cur.without_edges([i])
        if oracle(trial, target=d) == d:
            cur = trial
        else:
            i += 1
        order = _as_path(cur, k)
    if order is None or cur.path_weight(order) != d:
        raise ExtractionFailed(f"remaining {cur.m} edges do not form a k-path of weight {d}")
    return order


def recover_with_oracle(g: WeightedGraph, k: int, d, cfg: RecoverConfig, oracle: Oracle) -> List[int]:
    """Vertex sequence of a k-path on which ``oracle`` reports ``d``."""
    rng = np.random.default_rng(np.random.SeedSequence([cfg.inner.seed & (2**64 - 1), _SHRINK_STREAM, 0]))
    chosen = reduce_vertices(g, k, d, cfg, oracle, rng)
    sub, labels = g.subgraph(chosen)
    return [labels[v - 1] for v in extract_order(sub, k, d, oracle)]


def recover_path(g: WeightedGraph, k: int, cfg: RecoverConfig = RecoverConfig(), bound=None) -> SolveReport:
    """Weight and vertex order of a minimum-weight k-path (optionally among weights <= bound)."""
    check_k(k)
    t0 = time.perf_counter()
    oracle = PathOracle(k, cfg.inner, bound)
    d = oracle(g)
    report = SolveReport(weight=d, seed=cfg.inner.seed, k=k, mode="exact" if bound is None else "bounded")
    if d is not None:
        if k == 1:
            report.vertices = [1]
        else:
            path = recover_with_oracle(g, k, d, cfg, oracle)
            check_path(g, k, path, d)
            report.vertices = path
    report.repetitions_used = oracle.repetitions
    report.elapsed = time.perf_counter() - t0
    return report


def check_path(g: WeightedGraph, k: int, path: Sequence[int], d) -> None:
    if len(path) != k or len(set(path)) != k:
        raise ExtractionFailed(f"recovered sequence {path} is not k={k} distinct vertices")
    w = g.path_weight(path)
    if w is None or w != d:
        raise ExtractionFailed(f"recovered path {path} has weight {w}, expected {d}")
