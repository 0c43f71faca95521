"""scikit-learn style wrappers around the solvers.

``fit`` takes a graph (or an ``(m, 3)`` edge array) and stores ``weight_``,
the solution and the full ``report_``.  There is no ``predict``: the fitted
attributes are the answer.
"""

from __future__ import annotations

from dataclasses import replace

from sklearn.base import BaseEstimator

from .approx import ApproxConfig, approx_min_kpath
from .exact import ExactConfig, min_kpath_weight
from .ktree import approx_min_ktree, min_ktree_weight, recover_tree_vertices
from .recover import RecoverConfig, recover_path
from .report import DEFAULT_SEED
from .validation import check_graph, check_tree


class _Base(BaseEstimator):
    def _inner(self) -> ExactConfig:
        return ExactConfig(repetitions=self.repetitions, seed=self.random_state, threads=self.threads)

    def _store(self, report):
        self.report_ = report
        self.weight_ = report.weight
        self.found_ = report.found
        return self


class MinWeightKPath(_Base):
    """Minimum-weight simple path on ``k`` vertices (integer weights)."""

    def __init__(self, k=3, repetitions=60, cap=None, recover=True, random_state=DEFAULT_SEED, threads=1, directed=True):
        self.k = k
        self.repetitions = repetitions
        self.cap = cap
        self.recover = recover
        self.random_state = random_state
        self.threads = threads
        self.directed = directed

    def fit(self, X, y=None):
        g = check_graph(X, directed=self.directed)
        inner = self._inner()
        if self.recover:
            report = recover_path(g, self.k, RecoverConfig(inner=inner), bound=self.cap)
        else:
            report = min_kpath_weight(g, self.k, replace(inner, cap=self.cap))
        self.path_ = report.vertices
        return self._store(report)


class ApproxMinWeightKPath(_Base):
    """Path within ``1 + epsilon`` of the optimum, real weights in [1, M]."""

    def __init__(self, k=3, epsilon=0.1, repetitions=60, random_state=DEFAULT_SEED, threads=1, directed=True):
        self.k = k
        self.epsilon = epsilon
        self.repetitions = repetitions
        self.random_state = random_state
        self.threads = threads
        self.directed = directed

    def fit(self, X, y=None):
        g = check_graph(X, directed=self.directed)
        cfg = ApproxConfig(k=self.k, epsilon=self.epsilon, seed=self.random_state, inner=self._inner())
        report = approx_min_kpath(g, cfg)
        self.path_ = report.vertices
        self.n_iter_ = report.iterations
        return self._store(report)


class MinWeightKTree(_Base):
    """Minimum-weight injective copy of ``tree`` in an undirected graph."""

    def __init__(self, tree=((1, 2),), repetitions=60, recover=True, random_state=DEFAULT_SEED, threads=1):
        self.tree = tree
        self.repetitions = repetitions
        self.recover = recover
        self.random_state = random_state
        self.threads = threads

    def fit(self, X, y=None):
        g = check_graph(X, directed=False)
        t = check_tree(self.tree)
        inner = self._inner()
        if self.recover:
            report = recover_tree_vertices(g, t, cfg=RecoverConfig(inner=inner))
        else:
            report = min_ktree_weight(g, t, inner)
        self.embedding_ = report.embedding
        return self._store(report)


class ApproxMinWeightKTree(_Base):
    def __init__(self, tree=((1, 2),), epsilon=0.1, repetitions=60, random_state=DEFAULT_SEED, threads=1):
        self.tree = tree
        self.epsilon = epsilon
        self.repetitions = repetitions
        self.random_state = random_state
        self.threads = threads

    def fit(self, X, y=None):
        g = check_graph(X, directed=False)
        t = check_tree(self.tree)
        cfg = ApproxConfig(k=t.k, epsilon=self.epsilon, seed=self.random_state, inner=self._inner())
        report = approx_min_ktree(g, t, cfg)
        self.embedding_ = report.embedding
        self.n_iter_ = report.iterations
        return self._store(report)
