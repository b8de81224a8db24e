import numpy as np
import pytest

from starwalk.graph import Graph


def random_connected_graph(n, rng, extra_p=0.2):
    """Random spanning tree plus independent extra edges."""
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.integers(i)]
        edges.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra_p:
                edges.add((i, j))
    return Graph(n, frozenset((int(a), int(b)) for a, b in edges))


@pytest.fixture(scope="session")
def random_graphs():
    rng = np.random.default_rng(20240601)
    return [random_connected_graph(int(rng.integers(2, 33)), rng) for _ in range(20)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
