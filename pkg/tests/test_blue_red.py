"""
Test the colored objective g and the exact best colouring of a fixed graph
"""
from itertools import product

import pytest

from src.blue_red import BlueRedGraph, best_red_coloring, g_value, vertex_g_contributions
from src.errors import InvalidInputError, InvalidParameterError
from src.graph_core import count_cliques
from tests.conftest import random_graph


def _brute_best(graph, k):
    edges = graph.edges()
    best = 0
    for colors in product((False, True), repeat=len(edges)):
        red = [edge for edge, is_red in zip(edges, colors) if is_red]
        best = max(best, g_value(BlueRedGraph.with_red(graph, red), k))
    return best


def test_g_examples(k3, k4):
    assert g_value(BlueRedGraph.all_blue(k4), 3) == 4
    assert g_value(BlueRedGraph.with_red(k4, k4.edges()), 3) == 6
    assert g_value(BlueRedGraph.with_red(k3, [(2, 1)]), 3) == 1
    # one red edge kills two of the four triangles
    assert g_value(BlueRedGraph.with_red(k4, [(0, 1)]), 3) == 3


def test_g_rejects_small_k(k4):
    with pytest.raises(InvalidParameterError):
        g_value(BlueRedGraph.all_blue(k4), 2)


def test_red_edge_must_exist(p3):
    with pytest.raises(InvalidInputError):
        BlueRedGraph.with_red(p3, [(0, 2)])


def test_best_coloring_matches_brute_force(rng):
    for _ in range(25):
        graph = random_graph(rng, int(rng.integers(3, 7)), p=0.6)
        if graph.edge_count() > 12:
            continue
        for k in (3, 4):
            value, red = best_red_coloring(graph, k)
            assert value == _brute_best(graph, k)
            assert g_value(BlueRedGraph(graph, red), k) == value


def test_best_coloring_of_complete_graph(k4):
    value, red = best_red_coloring(k4, 3)
    assert value == 6
    assert len(red) == 6


def test_at_least_semantics(bowtie):
    value, _ = best_red_coloring(bowtie, 3)
    assert best_red_coloring(bowtie, 3, at_least=value)[0] == value
    assert best_red_coloring(bowtie, 3, at_least=value + 1) is None


def test_contributions_sum(rng):
    for _ in range(20):
        graph = random_graph(rng, 8, p=0.7)
        red = [edge for edge in graph.edges() if rng.random() < 0.3]
        colored = BlueRedGraph.with_red(graph, red)
        contributions = vertex_g_contributions(colored, 3)
        assert sum(contributions) == 3 * count_cliques(colored.blue_graph, 3) + 2 * len(colored.red_edges)
