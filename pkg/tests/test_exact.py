import numpy as np
import pytest

from minkpath.exact import (
    ExactConfig,
    bounded_min_kpath_weight,
    check_k,
    evaluate_walk_polynomial,
    min_kpath_weight,
    min_kpath_weight_once,
    repetition_rng,
    shift_weights,
)
from minkpath.graph import WeightedGraph, random_graph
from minkpath.oracle import oracle_kpath_weights, oracle_min_kpath

from conftest import int_weights


def test_shift_weights_example():
    g = WeightedGraph(3, [(1, 2, -3), (2, 3, 4)])
    h, offset = shift_weights(g, 3, M=4)
    assert [w for _, _, w in h.edges] == [1, 8]
    assert offset == 8
    assert h.path_weight([1, 2, 3]) - offset == 1


def test_shift_weights_empty_and_nonnegative():
    h, offset = shift_weights(WeightedGraph(4, []), 3, M=5)
    assert h.m == 0 and offset == 10
    g = WeightedGraph(3, [(1, 2, 2), (2, 3, 0)])
    h, _ = shift_weights(g, 3, M=2)
    assert [w for _, _, w in h.edges] == [4, 2]


def test_walk_polynomial_no_edges():
    assert evaluate_walk_polynomial(WeightedGraph(3, []), 2, np.random.default_rng(0), 3).is_zero()


def test_walk_polynomial_single_edge():
    g = WeightedGraph(2, [(1, 2, 5)])
    degrees = set()
    for rep in range(30):
        p = evaluate_walk_polynomial(g, 2, repetition_rng(1, 0, rep), 6)
        nz = np.flatnonzero(p.coeff.any(axis=0))
        assert set(nz) <= {5}
        degrees |= set(nz)
    assert degrees == {5}


def test_two_cycle_always_vanishes():
    g = WeightedGraph(3, [(1, 2, 1), (2, 1, 1)])
    for rep in range(50):
        assert evaluate_walk_polynomial(g, 3, repetition_rng(2, 0, rep), 5).is_zero()


def test_path_graph(path3):
    rep = min_kpath_weight(path3, 3, ExactConfig(seed=7))
    assert rep.weight == 12
    for r in range(20):
        assert min_kpath_weight_once(path3, 3, repetition_rng(7, 0, r)) in (None, 12)


def test_k_larger_than_n(triangle):
    assert min_kpath_weight(triangle, 5).weight is None
    assert min_kpath_weight_once(triangle, 5, np.random.default_rng(0)) is None


def test_k_one():
    assert min_kpath_weight(WeightedGraph(2, []), 1).weight == 0
    assert min_kpath_weight(WeightedGraph(0, []), 1).weight is None


def test_no_kpath_is_always_absent():
    g = WeightedGraph(4, [(1, 2, 1), (3, 4, 1)])
    assert min_kpath_weight(g, 3, ExactConfig(repetitions=30)).weight is None


def test_random_digraphs_match_oracle():
    rng = np.random.default_rng(5)
    for i in range(15):
        g = random_graph(8, 0.4, rng, int_weights(0, 10))
        want = oracle_min_kpath(g, 4)
        got = min_kpath_weight(g, 4, ExactConfig(seed=i)).weight
        assert got == (want[0] if want else None)


def test_negative_weights_and_undirected():
    rng = np.random.default_rng(6)
    for i in range(10):
        g = random_graph(7, 0.5, rng, int_weights(-10, 10), directed=False)
        want = oracle_min_kpath(g, 4)
        assert min_kpath_weight(g, 4, ExactConfig(seed=i)).weight == (want[0] if want else None)


def test_one_sided_single_runs():
    rng = np.random.default_rng(8)
    g = random_graph(8, 0.5, rng, int_weights(-5, 5))
    allowed = oracle_kpath_weights(g, 4)
    for r in range(40):
        w = min_kpath_weight_once(g, 4, repetition_rng(3, 0, r))
        assert w is None or w in allowed


def test_bounded_examples():
    g = WeightedGraph(3, [(1, 2, 1), (2, 3, 1)])
    assert bounded_min_kpath_weight(g, 3, 1).weight is None
    assert bounded_min_kpath_weight(g, 3, 2).weight == 2
    assert bounded_min_kpath_weight(g, 3, 2.7).weight == 2


def test_bounded_not_binding_matches_unbounded():
    rng = np.random.default_rng(9)
    g = random_graph(8, 0.5, rng, int_weights(0, 6))
    cfg = ExactConfig(seed=4)
    assert bounded_min_kpath_weight(g, 4, 3 * 6, cfg).weight == min_kpath_weight(g, 4, cfg).weight
    assert min_kpath_weight(g, 4, ExactConfig(seed=4, cap=18)).weight == min_kpath_weight(g, 4, cfg).weight


def test_bounded_rejects_bad_input():
    g = WeightedGraph(3, [(1, 2, -1), (2, 3, 1)])
    with pytest.raises(ValueError):
        bounded_min_kpath_weight(g, 3, 5)
    with pytest.raises(ValueError):
        bounded_min_kpath_weight(WeightedGraph(3, [(1, 2, 1)]), 2, -1)


def test_real_weights_rejected():
    with pytest.raises(ValueError):
        min_kpath_weight(WeightedGraph(2, [(1, 2, 1.5)]), 2)


def test_check_k():
    with pytest.raises(ValueError):
        check_k(0)
    with pytest.raises(ValueError):
        check_k(100)


def test_deterministic_replay():
    rng = np.random.default_rng(10)
    g = random_graph(9, 0.4, rng, int_weights(-3, 8))
    a = min_kpath_weight(g, 4, ExactConfig(seed=99, repetitions=10))
    b = min_kpath_weight(g, 4, ExactConfig(seed=99, repetitions=10))
    assert (a.weight, a.repetitions_used, a.seed) == (b.weight, b.repetitions_used, b.seed)


def test_threads_same_answer():
    rng = np.random.default_rng(12)
    g = random_graph(9, 0.4, rng, int_weights(0, 8))
    a = min_kpath_weight(g, 4, ExactConfig(seed=1, repetitions=20))
    b = min_kpath_weight(g, 4, ExactConfig(seed=1, repetitions=20, threads=3))
    assert a.weight == b.weight


def test_stop_at_stops_early(path3):
    rep = min_kpath_weight(path3, 3, ExactConfig(repetitions=60), stop_at=12)
    assert rep.weight == 12 and rep.repetitions_used < 60
