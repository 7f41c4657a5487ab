import pytest

from shortwide.data import load_fixture
from shortwide.graphs import parse_edge_list
from shortwide.paths import random_connected_graph

DISCRETE_LEVELS = (0.25, 0.5, 1.0)


def random_suite(count=120, max_nodes=10, seed=7):
    """Small connected graphs, alternating discrete and continuous weights."""
    graphs = []
    for k in range(count):
        n = 2 + (k * 7 + seed) % (max_nodes - 1)
        levels = DISCRETE_LEVELS if k % 2 == 0 else None
        density = 0.15 + 0.1 * (k % 4)
        graphs.append(random_connected_graph(n, density=density, levels=levels, seed=seed + k))
    return graphs


@pytest.fixture
def triangle():
    return load_fixture('triangle')


@pytest.fixture
def substructure():
    return load_fixture('substructure')


@pytest.fixture
def star():
    return load_fixture('star')


@pytest.fixture
def two_components():
    return parse_edge_list('a b 1\nb c 0.5\nc a 0.25\nx y 2\n')
