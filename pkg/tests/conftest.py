from pathlib import Path

import numpy as np
import pytest

from neronpy.graphs import banana_graph, cycle_graph, folded_bouquet
from neronpy.regressions import degree_eleven_input

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def banana():
    """Two vertices, three edges of weights 1, 2, 3."""
    return banana_graph(edge_weights=(1, 2, 3))


@pytest.fixture
def banana_unit():
    return banana_graph()


@pytest.fixture
def triangle():
    return cycle_graph(3)


@pytest.fixture
def folded_triple():
    return folded_bouquet(3)


@pytest.fixture
def degree_eleven():
    return degree_eleven_input()


@pytest.fixture
def rng():
    return np.random.default_rng(0)
