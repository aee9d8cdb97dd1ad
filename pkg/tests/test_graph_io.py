"""
Test graph6, JSON and hypergraph text formats
"""
import json
from itertools import combinations

import networkx as nx
import pytest

from src.errors import InvalidInputError
from src.graph_core import complete_graph
from src.graph_io import (
    format_hypergraph,
    from_graph6,
    from_networkx,
    graph_from_json,
    graph_to_json,
    hypergraph_from_json,
    hypergraph_to_json,
    load_graph_file,
    parse_hypergraph,
    to_graph6,
)
from src.hypergraph import Hypergraph
from tests.conftest import random_graph


def test_graph6_decoding_matches_networkx():
    assert from_graph6("D~{") == from_networkx(nx.from_graph6_bytes(b"D~{"))
    assert from_graph6("D~{") == complete_graph(5)
    assert from_graph6("A_") == complete_graph(2)
    assert from_graph6(">>graph6<<A_") == complete_graph(2)


def test_graph6_encoding(petersen):
    assert to_graph6(complete_graph(5)) == "D~{"
    assert from_graph6(to_graph6(petersen)) == petersen


def test_bad_graph6():
    with pytest.raises(InvalidInputError):
        from_graph6("not-a-graph")


def test_json_edge_list(tmp_path, bowtie):
    path = tmp_path / "bowtie.json"
    path.write_text(json.dumps(graph_to_json(bowtie)))
    assert load_graph_file(path) == bowtie
    with pytest.raises(InvalidInputError):
        graph_from_json({"edges": [[0, 1]]})
    with pytest.raises(InvalidInputError):
        graph_from_json({"n": 2, "edges": [[0, 2]]})
    path.write_text("{broken")
    with pytest.raises(InvalidInputError):
        load_graph_file(path)


def test_hypergraph_text():
    hypergraph = parse_hypergraph("3 6 : 1 2 5 ; 0 2 4 ; 0 1 3")
    assert hypergraph == Hypergraph(6, 3, ((0, 1, 3), (0, 2, 4), (1, 2, 5)))
    assert format_hypergraph(hypergraph) == "3 6 : 0 1 3 ; 0 2 4 ; 1 2 5"
    assert parse_hypergraph("3 4 :").edge_count() == 0


@pytest.mark.parametrize("text", ["3 6 0 1 2", "3 x : 0 1 2", "3 4 : 0 1", "3 4 : 0 1 9"])
def test_bad_hypergraph_text(text):
    with pytest.raises(InvalidInputError):
        parse_hypergraph(text)


def _random_hypergraph(rng, n, k):
    edges = [edge for edge in combinations(range(n), k) if rng.random() < 0.3]
    return Hypergraph.from_edges(n, k, edges)


def test_graph_round_trips(rng):
    for _ in range(500):
        graph = random_graph(rng, int(rng.integers(1, 11)), float(rng.random()))
        assert from_graph6(to_graph6(graph)) == graph
        assert graph_from_json(json.loads(json.dumps(graph_to_json(graph)))) == graph


def test_hypergraph_round_trips(rng):
    for _ in range(500):
        n = int(rng.integers(3, 11))
        hypergraph = _random_hypergraph(rng, n, int(rng.integers(2, min(n, 4) + 1)))
        assert parse_hypergraph(format_hypergraph(hypergraph)) == hypergraph
        assert hypergraph_from_json(json.loads(json.dumps(hypergraph_to_json(hypergraph)))) == hypergraph


def test_bad_hypergraph_json():
    with pytest.raises(InvalidInputError):
        hypergraph_from_json({"n": 4, "edges": [[0, 1, 2]]})
    with pytest.raises(InvalidInputError):
        hypergraph_from_json({"n": 4, "k": 3, "edges": [[0, 1, 7]]})
