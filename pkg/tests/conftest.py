"""Shared fixtures: the built-in example graphs and a seeded random family"""

import pytest

from tgk.corpus import (
    breaking_graph,
    cycle_graph,
    cycle_with_source,
    edge_graph,
    loop_entrance_graph,
    omega_graph,
    random_family,
)
from tgk.representations import subset_graph


@pytest.fixture
def edge():
    return edge_graph()


@pytest.fixture
def omega():
    return omega_graph()


@pytest.fixture
def loop_entrance():
    return loop_entrance_graph()


@pytest.fixture
def breaking():
    return breaking_graph()


@pytest.fixture
def cycle3():
    return cycle_graph(3)


@pytest.fixture
def cycle_source3():
    return cycle_with_source(3)


@pytest.fixture
def subset2():
    return subset_graph(2)


@pytest.fixture
def random_graphs():
    return random_family(seed=17, count=40)
