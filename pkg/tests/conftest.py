import numpy as np
import pytest

from minkpath.graph import WeightedGraph, random_graph


def int_weights(lo, hi):
    return lambda r: int(r.integers(lo, hi + 1))


def real_weights(lo, hi):
    return lambda r: float(r.uniform(lo, hi))


def planted_instance(n, k, rng, p=0.15, directed=True):
    """Random graph with heavy weights plus a light planted k-path.

    Every other k-path uses at least one heavy edge, so the planted one is the
    unique strict minimum.
    """
    g = random_graph(n, p, rng, int_weights(10, 50), directed=directed)
    path = [int(v) + 1 for v in rng.permutation(n)[:k]]
    planted = {(a, b) for a, b in zip(path, path[1:])}
    if not directed:
        planted |= {(b, a) for a, b in planted}
    edges = [(a, b, 1) for a, b in zip(path, path[1:])]
    edges += [(u, v, w) for u, v, w in g.edges if (u, v) not in planted]
    return WeightedGraph(n, edges, directed), path


@pytest.fixture
def path3():
    return WeightedGraph(3, [(1, 2, 5), (2, 3, 7)])


@pytest.fixture
def triangle():
    return WeightedGraph(3, [(1, 2, 1), (2, 3, 2), (3, 1, 4)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
