"""Input coercion shared by the estimator layer."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .graph import TreePattern, WeightedGraph, validate_tree


def check_graph(X, n: Optional[int] = None, directed: bool = True) -> WeightedGraph:
    """Accept a :class:`WeightedGraph` or an ``(m, 3)`` array of 1-based ``(u, v, w)`` rows.

    For arrays, ``n`` defaults to the largest endpoint.  Integer-valued weights
    stay integers; anything else makes the graph real-weighted.
    """
    if isinstance(X, WeightedGraph):
        return X
    arr = np.asarray(X)
    if arr.size == 0:
        arr = arr.reshape(0, 3)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected an (m, 3) edge array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.number):
        raise ValueError(f"edge array must be numeric, got dtype {arr.dtype}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("edge array contains NaN or inf")
    ends = arr[:, :2]
    if np.any(ends != np.round(ends)) or (arr.shape[0] and ends.min() < 1):
        raise ValueError("endpoints must be integers >= 1")
    ends = ends.astype(np.int64)
    top = int(ends.max()) if arr.shape[0] else 0
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"endpoint {top} exceeds n={n}")
    w = arr[:, 2]
    integral = np.issubdtype(w.dtype, np.integer) or bool(np.all(w == np.round(w)))
    weights = [int(x) for x in w] if integral else [float(x) for x in w]
    edges = [(int(u), int(v), x) for (u, v), x in zip(ends, weights)]
    return WeightedGraph(n, edges, directed)


def check_tree(tree) -> TreePattern:
    """A :class:`TreePattern`, or an edge list on nodes ``1..k``."""
    if isinstance(tree, TreePattern):
        return validate_tree(tree)
    edges = [(int(a), int(b)) for a, b in tree]
    return validate_tree(TreePattern(len(edges) + 1, edges))
