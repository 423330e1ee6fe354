import random

import pytest

from hamindex.graphs import Graph


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def petersen():
    edges = ([(i, (i + 1) % 5) for i in range(5)]
             + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
             + [(i, i + 5) for i in range(5)])
    return Graph.from_edges(10, edges, "Petersen")


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)
