"""
Test Berge-copy detection

The backtracking detector is checked against the exhaustive oracle on random
3-uniform hypergraphs, and every witness it returns is re-validated from
scratch.
"""
from itertools import combinations

import networkx as nx
import pytest
from networkx.algorithms.bipartite import hopcroft_karp_matching

from src.enumeration import free_classes
from src.errors import CapExceededError, InvalidInputError
from src.graph_core import Graph, complete_graph
from src.hypergraph import (
    Hypergraph,
    clique_hypergraph,
    contains_berge,
    contains_berge_oracle,
    expansion,
    max_matching,
    validate_berge_witness,
)


def _random_hypergraph(rng, n, k, max_edges):
    triples = list(combinations(range(n), k))
    count = int(rng.integers(0, min(max_edges, len(triples)) + 1))
    chosen = rng.choice(len(triples), size=count, replace=False)
    return Hypergraph.from_edges(n, k, [triples[int(i)] for i in chosen])


@pytest.mark.berge
def test_detector_agrees_with_oracle(rng, k3, k4, c4, p3):
    patterns = [p3, k3, c4, k4]
    for _ in range(200):
        hypergraph = _random_hypergraph(rng, int(rng.integers(3, 8)), 3, 7)
        pattern = patterns[int(rng.integers(0, len(patterns)))]
        witness = contains_berge(hypergraph, pattern)
        assert (witness is not None) == contains_berge_oracle(hypergraph, pattern)
        if witness is not None:
            assert validate_berge_witness(hypergraph, pattern, witness)


@pytest.mark.berge
def test_all_hypergraphs_on_four_vertices(k3):
    triples = list(combinations(range(4), 3))
    for mask in range(1 << len(triples)):
        hypergraph = Hypergraph.from_edges(4, 3, [t for i, t in enumerate(triples) if (mask >> i) & 1])
        assert (contains_berge(hypergraph, k3) is not None) == contains_berge_oracle(hypergraph, k3)
        # a Berge triangle needs three hyperedges
        if hypergraph.edge_count() < 3:
            assert contains_berge(hypergraph, k3) is None


def test_two_hyperedges_on_one_triangle_are_not_enough(k3):
    hypergraph = Hypergraph.from_edges(4, 3, [(0, 1, 2), (0, 1, 3)])
    assert contains_berge(hypergraph, k3) is None
    assert contains_berge(hypergraph.with_edge((1, 2, 3)), k3) is not None


def test_through_matches_full_search(rng, k3, c4):
    for _ in range(120):
        hypergraph = _random_hypergraph(rng, int(rng.integers(4, 8)), 3, 7)
        if not hypergraph.edges:
            continue
        added = hypergraph.edges[int(rng.integers(0, hypergraph.edge_count()))]
        base = Hypergraph.from_edges(hypergraph.n, 3, [e for e in hypergraph.edges if e != added])
        for pattern in (k3, c4):
            if contains_berge(base, pattern) is not None:
                continue
            through = contains_berge(hypergraph, pattern, through=added)
            assert (through is not None) == (contains_berge(hypergraph, pattern) is not None)


def test_witness_validation_rejects_tampering(k3):
    hypergraph = Hypergraph.from_edges(5, 3, [(0, 1, 3), (1, 2, 4), (0, 2, 3)])
    witness = contains_berge(hypergraph, k3)
    assert witness is not None
    assert validate_berge_witness(hypergraph, k3, witness)
    first, second = witness.edge_assignment[0], witness.edge_assignment[1]
    reused = (first, (second[0], first[1])) + witness.edge_assignment[2:]
    tampered = type(witness)(witness.vertex_embedding, reused)
    assert not validate_berge_witness(hypergraph, k3, tampered)


@pytest.mark.parametrize("k", [3, 4])
@pytest.mark.parametrize("pattern_name", ["k3", "k4", "c5"])
def test_expansion_contains_its_pattern(request, k, pattern_name):
    pattern = request.getfixturevalue(pattern_name)
    expanded = expansion(pattern, k)
    assert expanded.edge_count() == pattern.edge_count()
    assert expanded.n == pattern.n + (k - 2) * pattern.edge_count()
    witness = contains_berge(expanded, pattern)
    assert witness is not None and validate_berge_witness(expanded, pattern, witness)


def test_expansion_numbering(k3):
    assert expansion(k3, 3).edges == ((0, 1, 3), (0, 2, 4), (1, 2, 5))


@pytest.mark.parametrize("n", [4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_clique_hypergraph_of_free_graphs(n, k4):
    for graph in free_classes(k4, n):
        assert contains_berge(clique_hypergraph(graph, 3), k4) is None


def test_clique_hypergraph_of_k5_has_berge_k4():
    hypergraph = clique_hypergraph(complete_graph(5), 3)
    assert hypergraph.edge_count() == 10
    assert contains_berge(hypergraph, complete_graph(4)) is not None


def test_max_matching_against_hopcroft_karp(rng):
    for _ in range(50):
        left, right = int(rng.integers(1, 8)), int(rng.integers(1, 8))
        left_adj = [[h for h in range(right) if rng.random() < 0.35] for _ in range(left)]
        bipartite = nx.Graph()
        bipartite.add_nodes_from(("L", u) for u in range(left))
        bipartite.add_nodes_from(("R", h) for h in range(right))
        bipartite.add_edges_from((("L", u), ("R", h)) for u in range(left) for h in left_adj[u])
        expected = len(hopcroft_karp_matching(bipartite, top_nodes=[("L", u) for u in range(left)])) // 2
        matched = max_matching(left_adj)
        assert len(matched) == expected
        assert len(set(matched.values())) == len(matched)
        assert all(h in left_adj[u] for u, h in matched.items())


def test_edgeless_pattern_rejected():
    hypergraph = Hypergraph.from_edges(4, 3, [(0, 1, 2)])
    with pytest.raises(InvalidInputError):
        contains_berge(hypergraph, Graph.empty(2))


def test_oracle_guard(k3):
    with pytest.raises(CapExceededError):
        contains_berge_oracle(Hypergraph.from_edges(9, 3, []), k3)


def test_malformed_hyperedges():
    with pytest.raises(InvalidInputError):
        Hypergraph.from_edges(4, 3, [(0, 1)])
    with pytest.raises(InvalidInputError):
        Hypergraph.from_edges(4, 3, [(0, 1, 2), (2, 1, 0)])
    with pytest.raises(InvalidInputError):
        Hypergraph.from_edges(3, 3, [(0, 1, 3)])


@pytest.mark.berge
def test_berge_copies_survive_adding_hyperedges(rng, k3, c4, p3):
    patterns = [p3, k3, c4]
    for _ in range(100):
        n = int(rng.integers(4, 8))
        smaller = _random_hypergraph(rng, n, 3, 5)
        extra = [edge for edge in combinations(range(n), 3) if rng.random() < 0.2]
        larger = Hypergraph.from_edges(n, 3, sorted(smaller.edge_set | set(extra)))
        assert smaller.is_subhypergraph_of(larger)
        for pattern in patterns:
            if contains_berge(smaller, pattern) is not None:
                assert contains_berge(larger, pattern) is not None
    assert not Hypergraph.from_edges(5, 3, [(0, 1, 2)]).is_subhypergraph_of(Hypergraph.from_edges(5, 3, []))
