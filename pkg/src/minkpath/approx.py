"""(1+eps)-approximation for real weights in [1, M] by adaptive scaling.

Bounds ``L <= OPT <= U`` start at ``(k', k'M)``.  Each round scales weights
down by ``delta*U/k'`` with ``delta = (L/U)^(1/3) - (L/U)^(1/2)`` and asks a
degree-capped exact solver whether something of scaled weight at most
``sqrt(LU)`` exists, which shrinks ``U/L`` to at most ``(U/L)^(2/3)``.  Once
``U <= 2L`` one last scaled call with granularity ``eps*L/k'`` gives the
answer.  The driver only needs a :class:`BoundedProblem`.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from typing import Any, List, Optional, Tuple

from .exact import ExactConfig, bounded_min_kpath_weight, check_k, min_kpath_weight
from .exceptions import OracleFailure
from .graph import WeightedGraph
from .recover import PathOracle, RecoverConfig, check_path, recover_with_oracle
from .report import DEFAULT_SEED, SolveReport

MAX_ATTEMPTS = 3
_FINAL_STREAM = 2**32 + 7
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class ApproxConfig:
    k: int
    epsilon: float = 0.1
    seed: int = DEFAULT_SEED
    inner: ExactConfig = field(default_factory=ExactConfig)

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        check_k(self.k)


@dataclass
class ScaleState:
    L: float
    U: float
    k_prime: int
    iteration: int = 0

    @property
    def ratio(self) -> float:
        return self.U / self.L


class BoundedProblem:
    """What the scaling driver needs from a concrete problem (k-path, k-tree)."""

    k: int

    def exists(self, g: WeightedGraph, cfg: ExactConfig) -> bool:
        raise NotImplementedError

    def bounded(self, g: WeightedGraph, B: float, cfg: ExactConfig) -> Optional[int]:
        raise NotImplementedError

    def recover(self, g: WeightedGraph, B: float, d: int, cfg: ExactConfig) -> Any:
        raise NotImplementedError

    def weight_of(self, g: WeightedGraph, solution) -> float:
        raise NotImplementedError


class KPathProblem(BoundedProblem):
    def __init__(self, k: int):
        self.k = k

    def exists(self, g, cfg):
        flat = g.with_weights([0] * g.m)
        return min_kpath_weight(flat, self.k, cfg).weight is not None

    def bounded(self, g, B, cfg):
        return bounded_min_kpath_weight(g, self.k, B, cfg).weight

    def recover(self, g, B, d, cfg):
        oracle = PathOracle(self.k, cfg, bound=B)
        path = recover_with_oracle(g, self.k, d, RecoverConfig(inner=cfg), oracle)
        check_path(g, self.k, path, d)
        return path

    def weight_of(self, g, path):
        return g.path_weight(path)


def scale_weights(g: WeightedGraph, divisor: float) -> WeightedGraph:
    """Replace every weight ``w`` by ``floor(w / divisor)``."""
    if not divisor > 0:
        raise ValueError(f"divisor must be positive, got {divisor}")
    return g.with_weights([int(math.floor(w / divisor)) for _, _, w in g.edges])


def step_parameters(L: float, U: float, k_prime: int) -> Tuple[float, float, float]:
    """``(X, delta, divisor)`` for one refinement round."""
    X = math.sqrt(L * U)
    r = L / U
    delta = r ** (1.0 / 3.0) - math.sqrt(r)
    return X, delta, delta * U / k_prime


def refine_bounds(
    state: ScaleState, g: WeightedGraph, problem: BoundedProblem, cfg: ExactConfig
) -> ScaleState:
    """One round of the scaling loop; requires ``U > 2L``."""
    if not state.U > 2 * state.L:
        raise ValueError(f"refinement needs U > 2L, got L={state.L}, U={state.U}")
    X, delta, divisor = step_parameters(state.L, state.U, state.k_prime)
    scaled = scale_weights(g, divisor)
    found = problem.bounded(scaled, X / divisor, cfg) is not None
    if found:
        return ScaleState(state.L, X + delta * state.U, state.k_prime, state.iteration + 1)
    return ScaleState(X, state.U, state.k_prime, state.iteration + 1)


def check_real_weights(g: WeightedGraph) -> None:
    if g.m and g.min_weight < 1:
        raise ValueError(f"approximation needs weights in [1, M], found {g.min_weight}")


def _attempt(g, problem, cfg: ApproxConfig, inner: ExactConfig):
    k_prime = problem.k - 1
    M = max(float(g.max_abs_weight), 1.0)
    state = ScaleState(float(k_prime), k_prime * M, k_prime)
    trace: List[Tuple[float, float]] = [(state.L, state.U)]
    while state.U > 2 * state.L:
        state = refine_bounds(state, g, problem, replace(inner, stream=inner.stream + state.iteration + 1))
        trace.append((state.L, state.U))
    divisor = cfg.epsilon * state.L / k_prime
    scaled = scale_weights(g, divisor)
    B = state.U / divisor
    final_cfg = replace(inner, stream=_FINAL_STREAM)
    d = problem.bounded(scaled, B, final_cfg)
    if d is None:
        return None, None, trace
    solution = problem.recover(scaled, B, d, final_cfg)
    w = problem.weight_of(g, solution)
    tol = 1e-9 * state.U
    # w >= OPT >= L, and w <= w_eff + eps*L <= U + eps*L, unless a solver call erred
    if w < state.L - tol or w > state.U + cfg.epsilon * state.L + tol:
        return None, None, trace
    return w, solution, trace


def approximate(g: WeightedGraph, problem: BoundedProblem, cfg: ApproxConfig, mode: str = "approx") -> SolveReport:
    """Run the scaling driver, retrying with fresh randomness if bracketing breaks."""
    t0 = time.perf_counter()
    check_real_weights(g)
    report = SolveReport(seed=cfg.seed, mode=mode, k=problem.k)
    for attempt in range(MAX_ATTEMPTS):
        inner = replace(cfg.inner, seed=(cfg.seed + attempt * _GOLDEN) % 2**64)
        if not problem.exists(g, inner):
            break
        if problem.k == 1:
            report.weight, report.trace = 0.0, []
            _store_solution(report, {1: 1} if mode == "tree-approx" else [1])
            break
        w, solution, trace = _attempt(g, problem, cfg, inner)
        report.trace = trace
        if w is not None:
            report.weight = w
            _store_solution(report, solution)
            break
    else:
        raise OracleFailure(f"bracketing violated in all {MAX_ATTEMPTS} attempts")
    report.elapsed = time.perf_counter() - t0
    return report


def _store_solution(report: SolveReport, solution) -> None:
    if isinstance(solution, dict):
        report.embedding = solution
    else:
        report.vertices = solution


def approx_min_kpath(g: WeightedGraph, cfg: ApproxConfig) -> SolveReport:
    """Weight (and path) within a factor ``1 + eps`` of the optimum."""
    return approximate(g, KPathProblem(cfg.k), cfg)
