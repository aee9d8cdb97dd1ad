"""
Test subgraph search against networkx's monomorphism matcher
"""
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from src.graph_core import Graph, complete_graph, turan_graph
from src.graph_io import to_networkx
from src.subgraph import embedding_order, find_embedding, is_free
from tests.conftest import random_graph


def _is_embedding(pattern, host, image):
    if len(set(image)) != pattern.n:
        return False
    return all(host.has_edge(image[u], image[v]) for u, v in pattern.edges())


@pytest.mark.parametrize("pattern_name", ["k3", "k4", "c4", "c5", "p3", "bowtie"])
def test_agrees_with_graph_matcher(request, rng, pattern_name):
    pattern = request.getfixturevalue(pattern_name)
    for _ in range(40):
        host = random_graph(rng, int(rng.integers(pattern.n, 9)), p=float(rng.uniform(0.3, 0.8)))
        matcher = GraphMatcher(to_networkx(host), to_networkx(pattern))
        expected = matcher.subgraph_is_monomorphic()
        image = find_embedding(pattern, host)
        assert (image is not None) == expected
        if image is not None:
            assert _is_embedding(pattern, host, image)


def test_turan_graphs_are_clique_free():
    for n in range(3, 10):
        assert is_free(turan_graph(n, 2), complete_graph(3))
        assert not is_free(turan_graph(n, 3), complete_graph(3))


def test_must_use(k3):
    # triangle 0-1-2 plus pendant vertex 3
    host = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert find_embedding(k3, host, must_use=3) is None
    image = find_embedding(k3, host, must_use=1)
    assert image is not None and 1 in image
    assert _is_embedding(k3, host, image)


def test_pattern_larger_than_host(k4, k3):
    assert find_embedding(k4, k3) is None


def test_embedding_order_is_connected_first(bowtie):
    order = embedding_order(bowtie, [1])
    assert order[0] == 1
    assert sorted(order) == list(range(bowtie.n))
    # every later vertex of a connected pattern has a placed neighbour
    for i in range(1, len(order)):
        assert any(bowtie.has_edge(order[i], u) for u in order[:i])
