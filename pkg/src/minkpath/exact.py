"""Randomised exact minimum-weight k-path via group-algebra evaluation.

Every k-walk contributes ``y^I * x^I * z^{w(I)}``.  With ``x_i = 1_G + v_i``
non-simple walks cancel exactly, so the lowest z-degree that survives the
evaluation is the weight of a genuine simple k-path, and with probability at
least 1/5 it is the optimum.  Repetitions take the minimum.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .gf2e import FieldParams
from .graph import WeightedGraph
from .group_algebra import RingElement, RingParams, lift_arrays, min_degree_arrays
from .report import DEFAULT_SEED, SolveReport

MAX_K = 24
# max elements materialised per propagation chunk
_CHUNK_ELEMS = 2**21


@dataclass(frozen=True)
class ExactConfig:
    repetitions: int = 60
    seed: int = DEFAULT_SEED
    cap: Optional[float] = None
    threads: int = 1
    # independent sub-stream id, so repeated oracle calls do not share draws
    stream: int = 0

    def __post_init__(self):
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")


def check_k(k: int) -> int:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in [1, {MAX_K}], got {k}")
    return int(k)


def repetition_rng(seed: int, stream: int, rep: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), stream, rep]))


def shift_weights(g: WeightedGraph, k: int, M: Optional[int] = None) -> Tuple[WeightedGraph, int]:
    """Add ``M`` to every edge weight; returns the graph and the k-path offset ``(k-1)*M``."""
    if g.weight_kind != "integer":
        raise ValueError("weight shifting needs integer weights")
    if M is None:
        M = g.max_abs_weight
    if g.min_weight < -M:
        raise ValueError(f"weight {g.min_weight} below -M={-M}")
    return g.with_weights([w + M for _, _, w in g.edges]), (k - 1) * M


def propagate(S: np.ndarray, src, dst, wts, ys, field: FieldParams) -> np.ndarray:
    """``out[dst] ^= y * z^w * S[src]`` over all arcs, degrees truncated.

    The batched form of one ring-monomial application per matrix entry.
    """
    n, G, D = S.shape
    out = np.zeros_like(S)
    keep = np.flatnonzero(wts < D)
    order = keep[np.argsort(dst[keep], kind="stable")]
    padded = np.zeros((n, G, 2 * D), dtype=S.dtype)
    padded[:, :, D:] = S
    # window[i, g, D - w] is S[i, g] multiplied by z^w
    window = sliding_window_view(padded, D, axis=-1)
    use_table = field.ell <= 10
    if use_table:
        flat = field.mul_table().ravel()
        idx_t = np.uint16 if 2 * field.ell <= 16 else np.uint32
    packable = (G * D * S.itemsize) % 8 == 0
    step = max(1, _CHUNK_ELEMS // (G * D))
    for lo in range(0, len(order), step):
        part = order[lo : lo + step]
        d = dst[part]
        shifted = window[src[part], :, D - wts[part]]
        if use_table:
            vals = np.take(flat, (ys[part].astype(idx_t) << field.ell)[:, None, None] | shifted)
        else:
            vals = field.mul_array(ys[part][:, None, None], shifted)
        starts = np.flatnonzero(np.r_[True, d[1:] != d[:-1]])
        if packable:
            red = np.bitwise_xor.reduceat(vals.reshape(len(part), -1).view(np.uint64), starts, axis=0)
            out[d[starts]] ^= red.view(S.dtype).reshape(-1, G, D)
        else:
            out[d[starts]] ^= np.bitwise_xor.reduceat(vals, starts, axis=0)
    return out


def evaluate_walk_polynomial(g: WeightedGraph, k: int, rng: np.random.Generator, cap: int) -> RingElement:
    """Evaluate ``1 . B_1 ... B_{k-1} . x`` at random ``x_i = 1_G + v_i`` and ``y``.

    Weights must be non-negative integers.  Draw order: the n group vectors,
    then one field value per arc for each of the k-1 layers.
    """
    params = RingParams.for_k(k, cap)
    field = params.field
    if g.m and g.min_weight < 0:
        raise ValueError("walk polynomial needs non-negative weights")
    src, dst, wts = g.arcs()
    vs = rng.integers(0, params.group_size, size=g.n)
    R = np.zeros((g.n,) + params.shape, dtype=field.dtype)
    R[:, 0, 0] = 1
    for _ in range(k - 1):
        ys = rng.integers(0, field.order, size=len(src))
        R = propagate(lift_arrays(R, vs), src, dst, wts, ys, field)
    R = lift_arrays(R, vs)
    return RingElement(params, np.bitwise_xor.reduce(R, axis=0) if g.n else np.zeros(params.shape))


def _prepare(g: WeightedGraph, k: int, bound: Optional[float]):
    """Shifted/filtered graph, the offset to subtract, and the degree cap."""
    if g.weight_kind != "integer":
        raise ValueError("exact solver needs integer weights")
    if bound is None:
        s = max(0, -g.min_weight)
        h, offset = shift_weights(g, k, s)
        cap = (k - 1) * h.max_abs_weight + 1
        return h, offset, cap
    if bound < 0:
        raise ValueError(f"weight bound must be >= 0, got {bound}")
    if g.m and g.min_weight < 0:
        raise ValueError("bounded solver needs non-negative weights")
    B = math.floor(bound)
    h = g.without_edges(i for i, (_, _, w) in enumerate(g.edges) if w > B)
    cap = min(B, (k - 1) * h.max_abs_weight) + 1
    return h, 0, cap


def _single_run(h: WeightedGraph, k: int, offset: int, cap: int, rng) -> Optional[int]:
    d = min_degree_arrays(evaluate_walk_polynomial(h, k, rng, cap).coeff)
    return None if d is None else d - offset


def min_kpath_weight_once(
    g: WeightedGraph, k: int, rng: np.random.Generator, cap: Optional[float] = None
) -> Optional[int]:
    """One unamplified run.  ``cap`` (if given) is the weight bound B.

    A returned value is always the weight of some simple k-path.
    """
    check_k(k)
    if k == 1:
        return 0 if g.n else None
    if k > g.n:
        return None
    h, offset, D = _prepare(g, k, cap)
    return _single_run(h, k, offset, D, rng)


def _amplified(g, k, cfg: ExactConfig, bound, mode, stop_at=None) -> SolveReport:
    check_k(k)
    t0 = time.perf_counter()
    report = SolveReport(seed=cfg.seed, mode=mode, k=k)
    if k == 1:
        if g.n:
            report.weight, report.vertices = 0, [1]
        report.elapsed = time.perf_counter() - t0
        return report
    if k > g.n:
        report.elapsed = time.perf_counter() - t0
        return report
    h, offset, D = _prepare(g, k, bound)

    def run(rep):
        return _single_run(h, k, offset, D, repetition_rng(cfg.seed, cfg.stream, rep))

    results = []
    if cfg.threads > 1 and stop_at is None:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(run, range(cfg.repetitions)))
    else:
        for rep in range(cfg.repetitions):
            r = run(rep)
            results.append(r)
            if stop_at is not None and r is not None and r <= stop_at:
                break
    found = [r for r in results if r is not None]
    report.weight = min(found) if found else None
    report.repetitions_used = len(results)
    report.elapsed = time.perf_counter() - t0
    return report


def min_kpath_weight(g: WeightedGraph, k: int, cfg: ExactConfig = ExactConfig(), stop_at=None) -> SolveReport:
    """Amplified solver: minimum over ``cfg.repetitions`` independent runs.

    ``stop_at`` ends early once a run reaches that weight; sound because no
    run can return less than the true optimum.
    """
    if cfg.cap is not None:
        return bounded_min_kpath_weight(g, k, cfg.cap, cfg, stop_at=stop_at)
    return _amplified(g, k, cfg, None, "exact", stop_at)


def bounded_min_kpath_weight(
    g: WeightedGraph, k: int, B: float, cfg: ExactConfig = ExactConfig(), stop_at=None
) -> SolveReport:
    """Minimum k-path weight among paths of weight <= B (non-negative integer weights)."""
    return _amplified(g, k, replace(cfg, cap=None), B, "bounded", stop_at)
