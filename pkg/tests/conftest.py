from __future__ import annotations

import pathlib

import pytest

from assortshift.datasets import karate_graph
from assortshift.edgelist import read_edge_list
from assortshift.graph import build_graph

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def karate():
    return karate_graph()


@pytest.fixture(scope="session")
def dolphins():
    return read_edge_list(DATA_DIR / "dolphins.txt")


@pytest.fixture
def path4():
    return build_graph([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def path5():
    return build_graph([(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star4():
    return build_graph([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def triangle():
    return build_graph([(0, 1), (1, 2), (0, 2)])
