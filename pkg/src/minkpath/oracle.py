"""Brute-force reference solvers for small instances."""

from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from .exceptions import LimitExceeded
from .graph import TreePattern, WeightedGraph

MAX_N = 16
MAX_TREE_K = 8


def _check_n(g: WeightedGraph, max_n: int):
    if g.n > max_n:
        raise LimitExceeded(f"oracle limited to n <= {max_n}, got n={g.n}")


def _out_arcs(g: WeightedGraph) -> Dict[int, List[Tuple[int, float]]]:
    adj: Dict[int, List[Tuple[int, float]]] = {u: [] for u in range(1, g.n + 1)}
    for u, v, w in g.edges:
        adj[u].append((v, w))
        if not g.directed and u != v:
            adj[v].append((u, w))
    for u in adj:
        adj[u].sort()
    return adj


def oracle_min_kpath(g: WeightedGraph, k: int, max_n: int = MAX_N) -> Optional[Tuple[float, List[int]]]:
    """Exact optimum by DP over (vertex subset of size <= k, last vertex).

    Among optimal paths the lexicographically smallest vertex sequence wins.
    """
    _check_n(g, max_n)
    if k < 1 or k > g.n:
        return None
    adj = _out_arcs(g)
    # (mask, last) -> (weight, path)
    layer = {(1 << (u - 1), u): (0, (u,)) for u in range(1, g.n + 1)}
    for _ in range(k - 1):
        nxt: Dict[Tuple[int, int], Tuple[float, tuple]] = {}
        for (mask, last), (w, path) in layer.items():
            for v, wv in adj[last]:
                bit = 1 << (v - 1)
                if mask & bit:
                    continue
                cand = (w + wv, path + (v,))
                key = (mask | bit, v)
                if key not in nxt or cand < nxt[key]:
                    nxt[key] = cand
        layer = nxt
    if not layer:
        return None
    w, path = min(layer.values())
    return w, list(path)


def oracle_kpath_weights(g: WeightedGraph, k: int, max_n: int = MAX_N) -> Set[float]:
    """The set of weights of all simple k-vertex paths."""
    _check_n(g, max_n)
    if k < 1 or k > g.n:
        return set()
    adj = _out_arcs(g)
    layer: Dict[Tuple[int, int], Set[float]] = {(1 << (u - 1), u): {0} for u in range(1, g.n + 1)}
    for _ in range(k - 1):
        nxt: Dict[Tuple[int, int], Set[float]] = {}
        for (mask, last), ws in layer.items():
            for v, wv in adj[last]:
                bit = 1 << (v - 1)
                if not mask & bit:
                    nxt.setdefault((mask | bit, v), set()).update(w + wv for w in ws)
        layer = nxt
    out: Set[float] = set()
    for ws in layer.values():
        out |= ws
    return out


def enumerate_kpaths(g: WeightedGraph, k: int):
    """Yield ``(weight, path)`` for every simple k-path by plain recursion."""
    adj = _out_arcs(g)

    def extend(path, w):
        if len(path) == k:
            yield w, list(path)
            return
        for v, wv in adj[path[-1]]:
            if v not in path:
                yield from extend(path + (v,), w + wv)

    if 1 <= k:
        for u in range(1, g.n + 1):
            yield from extend((u,), 0)


def oracle_min_kpath_enum(g: WeightedGraph, k: int) -> Optional[Tuple[float, List[int]]]:
    return min(enumerate_kpaths(g, k), default=None)


def _tree_search(g: WeightedGraph, t: TreePattern, on_full, bound_fn):
    if g.directed:
        raise ValueError("tree patterns are matched into undirected graphs only")
    # assign tree nodes 1..k in order; each tree edge is charged once both ends are placed
    k = t.k
    adj_t = t.adjacency()
    earlier = {i: [j for j in adj_t[i] if j < i] for i in range(1, k + 1)}
    min_w = min((w for _, _, w in g.edges), default=0)
    remaining = [0] * (k + 2)
    for i in range(k, 0, -1):
        remaining[i] = remaining[i + 1] + len(earlier[i])
    assign: Dict[int, int] = {}
    used = set()

    def rec(i, partial):
        if i > k:
            on_full(partial, dict(assign))
            return
        lb = partial + remaining[i] * min(min_w, 0) if min_w < 0 else partial
        if not bound_fn(lb):
            return
        for v in range(1, g.n + 1):
            if v in used:
                continue
            add = 0
            ok = True
            for j in earlier[i]:
                w = g.weight(assign[j], v)
                if w is None:
                    ok = False
                    break
                add += w
            if not ok:
                continue
            assign[i] = v
            used.add(v)
            rec(i + 1, partial + add)
            used.discard(v)
            del assign[i]

    rec(1, 0)


def oracle_min_ktree(g: WeightedGraph, t: TreePattern, max_n: int = MAX_N) -> Optional[Tuple[float, Dict[int, int]]]:
    """Minimum-weight injective homomorphism of ``t`` into ``g`` by backtracking.

    Ties resolve to the lexicographically smallest mapping (node 1 first).
    """
    _check_n(g, max_n)
    if t.k > MAX_TREE_K:
        raise LimitExceeded(f"tree oracle limited to k <= {MAX_TREE_K}, got {t.k}")
    best: List = [None, None]

    def on_full(w, mapping):
        if best[0] is None or w < best[0]:
            best[0], best[1] = w, mapping

    _tree_search(g, t, on_full, lambda lb: best[0] is None or lb <= best[0])
    return None if best[0] is None else (best[0], best[1])


def oracle_ktree_weights(g: WeightedGraph, t: TreePattern, max_n: int = MAX_N) -> Set[float]:
    _check_n(g, max_n)
    out: Set[float] = set()
    _tree_search(g, t, lambda w, _m: out.add(w), lambda lb: True)
    return out


def embedding_weight(g: WeightedGraph, t: TreePattern, mapping: Dict[int, int]):
    """Weight of a tree embedding, or None if it is not an injective homomorphism."""
    if sorted(mapping) != list(range(1, t.k + 1)) or len(set(mapping.values())) != t.k:
        return None
    total = 0
    for a, b in t.edges:
        w = g.weight(mapping[a], mapping[b])
        if w is None:
            return None
        total += w
    return total
