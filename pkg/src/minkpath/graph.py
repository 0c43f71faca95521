"""Weighted graphs and tree patterns.

Vertices are numbered ``1..n`` and tree nodes ``1..k`` at the API surface;
the numpy views returned by :meth:`WeightedGraph.arcs` are 0-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from numbers import Integral
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import MalformedTree

Edge = Tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """Directed or undirected graph; parallel edges keep the first occurrence."""

    n: int
    edges: Tuple[Edge, ...]
    directed: bool = True
    _index: Dict[Tuple[int, int], float] = field(default=None, compare=False, repr=False, hash=False)

    def __init__(self, n: int, edges: Iterable[Sequence] = (), directed: bool = True):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        index: Dict[Tuple[int, int], float] = {}
        kept: List[Edge] = []
        for u, v, w in edges:
            u, v = int(u), int(v)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 1..{n}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in index:
                continue
            w = int(w) if isinstance(w, Integral) else float(w)
            index[key] = w
            kept.append((u, v, w))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(kept))
        object.__setattr__(self, "directed", bool(directed))
        object.__setattr__(self, "_index", index)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weight_kind(self) -> str:
        return "real" if any(isinstance(w, float) for _, _, w in self.edges) else "integer"

    @property
    def max_abs_weight(self):
        return max((abs(w) for _, _, w in self.edges), default=0)

    @property
    def min_weight(self):
        return min((w for _, _, w in self.edges), default=0)

    def weight(self, u: int, v: int) -> Optional[float]:
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        return self._index.get(key)

    def has_edge(self, u: int, v: int) -> bool:
        return self.weight(u, v) is not None

    def arcs(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """0-based ``(src, dst, weight)`` arrays; undirected edges appear both ways."""
        src, dst, wts = [], [], []
        for u, v, w in self.edges:
            src.append(u - 1)
            dst.append(v - 1)
            wts.append(w)
            if not self.directed and u != v:
                src.append(v - 1)
                dst.append(u - 1)
                wts.append(w)
        return (
            np.asarray(src, dtype=np.int64),
            np.asarray(dst, dtype=np.int64),
            np.asarray(wts, dtype=np.float64 if self.weight_kind == "real" else np.int64),
        )

    def neighbors(self, u: int) -> List[Tuple[int, float]]:
        out = []
        for a, b, w in self.edges:
            if a == u:
                out.append((b, w))
            elif not self.directed and b == u:
                out.append((a, w))
        return out

    def with_weights(self, weights: Sequence) -> "WeightedGraph":
        return WeightedGraph(self.n, [(u, v, w) for (u, v, _), w in zip(self.edges, weights)], self.directed)

    def without_edges(self, drop: Iterable[int]) -> "WeightedGraph":
        drop = set(drop)
        return WeightedGraph(self.n, [e for i, e in enumerate(self.edges) if i not in drop], self.directed)

    def subgraph(self, vertices: Iterable[int]) -> Tuple["WeightedGraph", List[int]]:
        """Induced subgraph relabelled to ``1..len(vertices)``, plus the new->old label list."""
        labels = sorted(set(vertices))
        pos = {v: i + 1 for i, v in enumerate(labels)}
        edges = [(pos[u], pos[v], w) for u, v, w in self.edges if u in pos and v in pos]
        return WeightedGraph(len(labels), edges, self.directed), labels

    def path_weight(self, path: Sequence[int]):
        """Total weight of a vertex sequence, or None if some step is not an edge."""
        total = 0
        for a, b in zip(path, path[1:]):
            w = self.weight(a, b)
            if w is None:
                return None
            total += w
        return total


@dataclass(frozen=True)
class TreePattern:
    """A k-node tree on nodes ``1..k``; node 1 is the root."""

    k: int
    edges: Tuple[Tuple[int, int], ...]

    def __init__(self, k: int, edges: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in edges))

    @classmethod
    def path(cls, k: int) -> "TreePattern":
        return cls(k, [(i, i + 1) for i in range(1, k)])

    @classmethod
    def star(cls, k: int) -> "TreePattern":
        return cls(k, [(1, i) for i in range(2, k + 1)])

    def adjacency(self) -> Dict[int, List[int]]:
        adj = {i: [] for i in range(1, self.k + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def children(self) -> Dict[int, List[int]]:
        """Children lists when rooted at node 1."""
        adj = self.adjacency()
        kids = {i: [] for i in adj}
        seen = {1}
        queue = deque([1])
        while queue:
            i = queue.popleft()
            for j in sorted(adj[i]):
                if j not in seen:
                    seen.add(j)
                    kids[i].append(j)
                    queue.append(j)
        return kids

    def postorder(self) -> List[int]:
        kids = self.children()
        order: List[int] = []
        stack = [(1, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            stack.append((node, True))
            for c in reversed(kids[node]):
                stack.append((c, False))
        return order


def validate_tree(t: TreePattern) -> TreePattern:
    """Raise :class:`MalformedTree` unless ``t`` is a tree on nodes 1..k."""
    if t.k < 1:
        raise MalformedTree(f"tree needs at least one node, got k={t.k}")
    for a, b in t.edges:
        if not (1 <= a <= t.k and 1 <= b <= t.k):
            raise MalformedTree(f"edge ({a}, {b}) outside node range 1..{t.k}")
        if a == b:
            raise MalformedTree(f"self-loop at node {a} (cycle)")
    if len(set(frozenset(e) for e in t.edges)) != len(t.edges):
        raise MalformedTree("repeated edge (cycle)")
    if len(t.edges) > t.k - 1:
        raise MalformedTree(f"{len(t.edges)} edges on {t.k} nodes (cycle)")
    adj = t.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        for j in adj[queue.popleft()]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != t.k:
        raise MalformedTree(f"disconnected: node 1 reaches {len(seen)} of {t.k} nodes")
    return t


def random_graph(n: int, p: float, rng: np.random.Generator, weights, directed: bool = True) -> WeightedGraph:
    """G(n, p) with weights drawn by ``weights(rng)``."""
    edges = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v or (not directed and v < u):
                continue
            if rng.random() < p:
                edges.append((u, v, weights(rng)))
    return WeightedGraph(n, edges, directed)


def random_tree(k: int, rng: np.random.Generator) -> TreePattern:
    """Uniform random attachment tree on nodes 1..k."""
    return TreePattern(k, [(int(rng.integers(1, i)), i) for i in range(2, k + 1)])
