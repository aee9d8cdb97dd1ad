"""
Test chromatic number, sigma and colour-critical elements
"""
import logging
from itertools import product

import pytest

from src.enumeration import free_classes
from src.errors import CapExceededError, InvalidInputError
from src.graph_core import Graph, complete_graph, turan_graph
from src.invariants import (
    chromatic_number,
    chromatic_profile,
    critical_edges,
    critical_vertices,
    dsatur_coloring,
    max_clique_size,
    sigma,
)
from tests.conftest import random_graph

logger = logging.getLogger(__name__)


def _brute_chi(graph):
    for colors in range(1, graph.n + 1):
        for assignment in product(range(colors), repeat=graph.n):
            if all(assignment[u] != assignment[v] for u, v in graph.edges()):
                return colors
    return 0


@pytest.mark.parametrize(
    "name,expected",
    [("k4", 4), ("c5", 3), ("c4", 2), ("petersen", 3), ("bowtie", 3), ("k3", 3), ("p3", 2)],
)
def test_chromatic_number_values(request, name, expected):
    assert chromatic_number(request.getfixturevalue(name)) == expected


def test_chromatic_number_degenerate_graphs():
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(Graph.empty(4)) == 1


def test_chromatic_number_brute_force(rng):
    for _ in range(40):
        graph = random_graph(rng, int(rng.integers(1, 7)), p=float(rng.uniform(0.2, 0.9)))
        assert chromatic_number(graph) == _brute_chi(graph)


def test_dsatur_is_proper_and_bounds(rng):
    for _ in range(30):
        graph = random_graph(rng, int(rng.integers(1, 11)))
        coloring = dsatur_coloring(graph)
        assert all(coloring[u] != coloring[v] for u, v in graph.edges())
        assert max_clique_size(graph) <= chromatic_number(graph) <= len(set(coloring))


@pytest.mark.parametrize("name,expected", [("k4", 1), ("c4", 2), ("t63", 2), ("bowtie", 1), ("c5", 1)])
def test_sigma_values(request, name, expected):
    assert sigma(request.getfixturevalue(name)) == expected


def test_sigma_guards():
    with pytest.raises(InvalidInputError):
        sigma(Graph.empty(0))
    with pytest.raises(CapExceededError):
        sigma(complete_graph(13))


def test_bowtie_profile(bowtie):
    profile = chromatic_profile(bowtie)
    assert profile.chi == 3
    assert profile.sigma == 1
    assert not profile.has_critical_edge
    # only the shared vertex
    assert profile.critical_vertices == (0,)


def test_complete_graph_profile(k4):
    profile = chromatic_profile(k4)
    assert profile.critical_edges == tuple(k4.edges())
    assert profile.critical_vertices == (0, 1, 2, 3)
    assert profile.as_dict()["chi"] == 4


def test_even_cycle_has_no_critical_elements(c4, c5):
    assert critical_edges(c4) == ()
    assert critical_vertices(c4) == ()
    assert len(critical_edges(c5)) == 5


def test_turan_graph_chromatic_number():
    for n in range(1, 10):
        for r in range(1, n + 2):
            assert chromatic_number(turan_graph(n, r)) == min(n, r), (n, r)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_critical_vertex_forces_sigma_one(n):
    converse_failures = []
    for graph in free_classes(complete_graph(n + 1), n):
        profile = chromatic_profile(graph)
        if profile.critical_vertices:
            assert profile.sigma == 1, graph.edges()
        elif profile.sigma == 1:
            converse_failures.append(graph)
    logger.info(
        "n=%d: %d classes with sigma 1 and no colour-critical vertex",
        n,
        len(converse_failures),
    )
