"""
Pytest configuration and shared fixtures for the Berge-Turán tests
"""
import json
import os
from pathlib import Path

import numpy as np
import pytest

from src.config import RunConfig
from src.graph_core import PETERSEN, BookB, Graph, build_family, complete_graph, turan_graph

DATASETS = Path(__file__).resolve().parent.parent / "datasets"


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    """G(n, p) drawn from a numpy generator"""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep BERGE_TURAN_* variables from leaking between tests"""
    for name in list(os.environ):
        if name.startswith("BERGE_TURAN_"):
            monkeypatch.delenv(name)
    yield
    for name in [name for name in os.environ if name.startswith("BERGE_TURAN_")]:
        del os.environ[name]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def golden():
    with open(DATASETS / "golden_values.json") as handle:
        return json.load(handle)


@pytest.fixture
def config():
    """Default caps, one worker, no cache"""
    return RunConfig(use_cache=False)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def bowtie():
    return build_family(BookB(2))


@pytest.fixture
def petersen():
    return build_family(PETERSEN)


@pytest.fixture
def t63():
    return turan_graph(6, 3)
