import numpy as np
import pytest

from assortbounds.graph import Graph, MetadataAssignment, validate_graph
from assortbounds.io import load_fixture

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_graph(edges, n=None):
    edges = list(edges)
    if n is None:
        n = 1 + max(max(e) for e in edges)
    return validate_graph(edges, n)


@pytest.fixture
def p3():
    # node 0 is an endpoint, node 1 the centre
    return make_graph([(0, 1), (1, 2)])


@pytest.fixture
def k4():
    return make_graph([(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def c6():
    return make_graph([(k, (k + 1) % 6) for k in range(6)])


@pytest.fixture(scope="session")
def wolf():
    return load_fixture("wolf")


def random_connected_graph(rng, n_min=3, n_max=7):
    """Rejection-sampled connected G(n, p) graph."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        p = rng.uniform(0.25, 0.9)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph(n, frozenset(edges))
        if edges and g.is_connected():
            return g


def random_degree_sequences(count, seed, n_max=7):
    rng = np.random.default_rng(seed)
    seqs = []
    seen = set()
    while len(seqs) < count:
        g = random_connected_graph(rng, 3, n_max)
        s = tuple(sorted(g.degrees, reverse=True))
        if s not in seen:
            seen.add(s)
            seqs.append(s)
    return seqs
