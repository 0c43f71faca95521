import numpy as np
import pytest

from minkpath.exceptions import LimitExceeded
from minkpath.graph import TreePattern, WeightedGraph, random_graph, random_tree
from minkpath.oracle import (
    embedding_weight,
    enumerate_kpaths,
    oracle_kpath_weights,
    oracle_min_kpath,
    oracle_min_kpath_enum,
    oracle_min_ktree,
    oracle_ktree_weights,
)

from conftest import int_weights


def test_path_examples(path3, triangle):
    assert oracle_min_kpath(path3, 3) == (12, [1, 2, 3])
    assert oracle_min_kpath(triangle, 5) is None


def test_complete_digraph():
    g = WeightedGraph(4, [(u, v, 1) for u in range(1, 5) for v in range(1, 5) if u != v])
    assert oracle_min_kpath(g, 3)[0] == 2


def test_weight_sets(path3, triangle):
    assert oracle_kpath_weights(path3, 3) == {12}
    assert oracle_kpath_weights(WeightedGraph(3, [(1, 2, 1)]), 3) == set()
    # golden: 1->2->3, 2->3->1, 3->1->2
    assert oracle_kpath_weights(triangle, 3) == {3, 5, 6}


def test_dp_matches_enumeration():
    rng = np.random.default_rng(1)
    for _ in range(20):
        g = random_graph(7, 0.5, rng, int_weights(-5, 5), directed=bool(rng.integers(2)))
        for k in (2, 3, 4):
            a, b = oracle_min_kpath(g, k), oracle_min_kpath_enum(g, k)
            assert (a and a[0]) == (b and b[0])
            assert oracle_kpath_weights(g, k) == {g.path_weight(p) for _, p in enumerate_kpaths(g, k)}


def test_size_limit():
    with pytest.raises(LimitExceeded):
        oracle_min_kpath(WeightedGraph(20, []), 3)


def test_tree_examples():
    tri = WeightedGraph(3, [(1, 2, 1), (2, 3, 2), (3, 1, 4)], directed=False)
    assert oracle_min_ktree(tri, TreePattern(1, []))[0] == 0
    w, mapping = oracle_min_ktree(tri, TreePattern.star(3))
    # golden: vertex 2 touches the weight-1 and weight-2 edges
    assert w == 3 and mapping[1] == 2
    assert oracle_ktree_weights(tri, TreePattern.star(3)) == {3, 5, 6}


def test_tree_path_pattern_equals_path_oracle():
    rng = np.random.default_rng(2)
    for _ in range(15):
        g = random_graph(7, 0.5, rng, int_weights(-5, 5), directed=False)
        a = oracle_min_ktree(g, TreePattern.path(4))
        b = oracle_min_kpath(g, 4)
        assert (a and a[0]) == (b and b[0])


def test_tree_embedding_is_valid():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = random_graph(7, 0.6, rng, int_weights(-5, 5), directed=False)
        t = random_tree(4, rng)
        res = oracle_min_ktree(g, t)
        if res is None:
            continue
        w, mapping = res
        assert len(set(mapping.values())) == 4
        assert embedding_weight(g, t, mapping) == w


def test_tree_rejects_directed(triangle):
    with pytest.raises(ValueError):
        oracle_min_ktree(triangle, TreePattern.path(3))
