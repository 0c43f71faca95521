"""Minimum-weight copies of a k-node tree.

For tree node ``i`` and graph vertex ``j``::

    C[i][j] = x_j * prod_{child l} ( sum_{j' ~ j} y_{(i,l),(j,j')} z^{w(j,j')} C[l][j'] )

evaluated bottom-up from the leaves (where ``C = x_j``) over the same ring as
the path solver, and ``Q = sum_j C[1][j]``.  Non-injective homomorphisms
repeat a vertex variable and cancel.
"""

from __future__ import annotations

import math
import time
from dataclasses import replace
from typing import Dict, Optional

import numpy as np

from .approx import ApproxConfig, BoundedProblem, approximate
from .exact import ExactConfig, check_k, propagate, repetition_rng
from .exceptions import ExtractionFailed
from .graph import TreePattern, WeightedGraph, validate_tree
from .group_algebra import RingElement, RingParams, lift_arrays, min_degree_arrays, mul_fast_arrays
from .oracle import _tree_search, embedding_weight
from .recover import PathOracle, RecoverConfig, reduce_vertices
from .report import SolveReport


def ktree_circuit_eval(
    g: WeightedGraph, t: TreePattern, rng: np.random.Generator, cap: int, counter: Optional[Dict[str, int]] = None
) -> RingElement:
    """Evaluate Q at random ``x_j = 1_G + v_j`` and y values.

    Draw order: n group vectors, then one field value per arc for each tree
    edge in post-order.  ``counter`` (if given) receives the number of edge
    terms (``"edge_terms"``) and general ring products (``"products"``).
    """
    if g.directed:
        raise ValueError("tree patterns are matched into undirected graphs only")
    if g.m and g.min_weight < 0:
        raise ValueError("circuit evaluation needs non-negative weights")
    params = RingParams.for_k(t.k, cap)
    field = params.field
    src, dst, wts = g.arcs()
    vs = rng.integers(0, params.group_size, size=g.n)
    kids = t.children()
    counts = {"edge_terms": 0, "products": 0}
    C: Dict[int, np.ndarray] = {}
    for i in t.postorder():
        acc = None
        for child in kids[i]:
            ys = rng.integers(0, field.order, size=len(src))
            # arc (j, j') feeds C[child][j'] into vertex j
            term = propagate(C.pop(child), dst, src, wts, ys, field)
            counts["edge_terms"] += len(src)
            if acc is None:
                acc = term
            else:
                acc = mul_fast_arrays(acc, term, params)
                counts["products"] += g.n
        if acc is None:
            acc = np.zeros((g.n,) + params.shape, dtype=field.dtype)
            acc[:, 0, 0] = 1
        C[i] = lift_arrays(acc, vs)
    if counter is not None:
        counter.update(counts)
    root = C[1]
    return RingElement(params, np.bitwise_xor.reduce(root, axis=0) if g.n else np.zeros(params.shape))


def _check_inputs(g: WeightedGraph, t: TreePattern):
    validate_tree(t)
    check_k(t.k)
    if g.directed:
        raise ValueError("tree patterns are matched into undirected graphs only")
    if g.weight_kind != "integer":
        raise ValueError("exact tree solver needs integer weights")


def _prepare(g: WeightedGraph, k: int, bound):
    if bound is None:
        s = max(0, -g.min_weight)
        h = g.with_weights([w + s for _, _, w in g.edges])
        return h, (k - 1) * s, (k - 1) * h.max_abs_weight + 1
    if bound < 0:
        raise ValueError(f"weight bound must be >= 0, got {bound}")
    if g.m and g.min_weight < 0:
        raise ValueError("bounded solver needs non-negative weights")
    B = math.floor(bound)
    h = g.without_edges(i for i, (_, _, w) in enumerate(g.edges) if w > B)
    return h, 0, min(B, (k - 1) * h.max_abs_weight) + 1


def min_ktree_weight_once(g: WeightedGraph, t: TreePattern, rng: np.random.Generator, cap=None) -> Optional[int]:
    _check_inputs(g, t)
    if t.k > g.n:
        return None
    h, offset, D = _prepare(g, t.k, cap)
    d = min_degree_arrays(ktree_circuit_eval(h, t, rng, D).coeff)
    return None if d is None else d - offset


def _amplified(g, t, cfg: ExactConfig, bound, mode, stop_at=None) -> SolveReport:
    _check_inputs(g, t)
    t0 = time.perf_counter()
    report = SolveReport(seed=cfg.seed, mode=mode, k=t.k)
    if t.k == 1 and g.n:
        report.weight, report.embedding = 0, {1: 1}
    elif t.k <= g.n:
        h, offset, D = _prepare(g, t.k, bound)
        found = []
        for rep in range(cfg.repetitions):
            report.repetitions_used += 1
            d = min_degree_arrays(ktree_circuit_eval(h, t, repetition_rng(cfg.seed, cfg.stream, rep), D).coeff)
            if d is not None:
                found.append(d - offset)
                if stop_at is not None and d - offset <= stop_at:
                    break
        report.weight = min(found) if found else None
    report.elapsed = time.perf_counter() - t0
    return report


def min_ktree_weight(g: WeightedGraph, t: TreePattern, cfg: ExactConfig = ExactConfig(), stop_at=None) -> SolveReport:
    """Amplified minimum weight of an injective copy of ``t`` in ``g``."""
    if cfg.cap is not None:
        return bounded_min_ktree_weight(g, t, cfg.cap, cfg, stop_at=stop_at)
    return _amplified(g, t, cfg, None, "tree", stop_at)


def bounded_min_ktree_weight(
    g: WeightedGraph, t: TreePattern, B: float, cfg: ExactConfig = ExactConfig(), stop_at=None
) -> SolveReport:
    return _amplified(g, t, replace(cfg, cap=None), B, "tree", stop_at)


class TreeOracle(PathOracle):
    def __init__(self, t: TreePattern, inner: ExactConfig, bound=None):
        super().__init__(t.k, inner, bound)
        self.tree = t

    def solve(self, g, cfg, target):
        if self.bound is None:
            return min_ktree_weight(g, self.tree, cfg, stop_at=target)
        return bounded_min_ktree_weight(g, self.tree, self.bound, cfg, stop_at=target)


def _embed_exhaustive(g: WeightedGraph, t: TreePattern, d) -> Optional[Dict[int, int]]:
    hit = []

    def on_full(w, mapping):
        if w == d and not hit:
            hit.append(mapping)

    _tree_search(g, t, on_full, lambda lb: not hit and lb <= d)
    return hit[0] if hit else None


def recover_tree_with_oracle(g, t, d, cfg: RecoverConfig, oracle) -> Dict[int, int]:
    rng = np.random.default_rng(np.random.SeedSequence([cfg.inner.seed & (2**64 - 1), 2**32 + 3, 0]))
    chosen = reduce_vertices(g, t.k, d, cfg, oracle, rng)
    sub, labels = g.subgraph(chosen)
    mapping = _embed_exhaustive(sub, t, d)
    if mapping is None:
        raise ExtractionFailed(f"no copy of weight {d} on the remaining {t.k} vertices")
    mapping = {i: labels[v - 1] for i, v in mapping.items()}
    if embedding_weight(g, t, mapping) != d:
        raise ExtractionFailed(f"embedding {mapping} does not have weight {d}")
    return mapping


def recover_tree_vertices(
    g: WeightedGraph, t: TreePattern, d=None, cfg: RecoverConfig = RecoverConfig(), bound=None
) -> SolveReport:
    """Weight ``d`` (solved for if not given) and an embedding achieving it."""
    _check_inputs(g, t)
    t0 = time.perf_counter()
    oracle = TreeOracle(t, cfg.inner, bound)
    if d is None:
        d = oracle(g)
    report = SolveReport(weight=d, seed=cfg.inner.seed, k=t.k, mode="tree")
    if d is not None:
        report.embedding = {1: 1} if t.k == 1 else recover_tree_with_oracle(g, t, d, cfg, oracle)
    report.repetitions_used = oracle.repetitions
    report.elapsed = time.perf_counter() - t0
    return report


class KTreeProblem(BoundedProblem):
    def __init__(self, t: TreePattern):
        self.tree = validate_tree(t)
        self.k = t.k

    def exists(self, g, cfg):
        return min_ktree_weight(g.with_weights([0] * g.m), self.tree, cfg).weight is not None

    def bounded(self, g, B, cfg):
        return bounded_min_ktree_weight(g, self.tree, B, cfg).weight

    def recover(self, g, B, d, cfg):
        oracle = TreeOracle(self.tree, cfg, bound=B)
        return recover_tree_with_oracle(g, self.tree, d, RecoverConfig(inner=cfg), oracle)

    def weight_of(self, g, mapping):
        return embedding_weight(g, self.tree, mapping)


def approx_min_ktree(g: WeightedGraph, t: TreePattern, cfg: ApproxConfig) -> SolveReport:
    """Tree copy of weight within ``1 + eps`` of optimal, for weights in [1, M]."""
    if cfg.k != t.k:
        cfg = replace(cfg, k=t.k)
    if g.directed:
        raise ValueError("tree patterns are matched into undirected graphs only")
    return approximate(g, KTreeProblem(t), cfg, mode="tree-approx")
