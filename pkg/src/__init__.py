"""
Berge-Turán exact computation toolkit

This package provides modules for:
- Graphs, Turán constructions and clique counting (graph_core)
- Canonical labelling and F-freeness (canonical, subgraph)
- Uniform hypergraphs and Berge-copy detection (hypergraph)
- Chromatic invariants of the forbidden graph (invariants)
- Exact extremal numbers and the sandwich chain (extremal)
- Symmetrization heuristic for colored lower bounds (symmetrizer)
- Exact evaluation of the counting inequality (inequality, conjecture)
- Result cache and command-line front end (cache, cli)
"""

__version__ = "0.1.0"

from src.extremal import (  # noqa: E402
    ExtremalResult,
    Problem,
    ex_berge,
    ex_colored,
    ex_edges,
    ex_generalized,
    verify_sandwich,
)
from src.graph_core import Graph, count_cliques, turan_clique_count, turan_graph  # noqa: E402
from src.hypergraph import Hypergraph, contains_berge  # noqa: E402

__all__ = [
    "ExtremalResult",
    "Graph",
    "Hypergraph",
    "Problem",
    "contains_berge",
    "count_cliques",
    "ex_berge",
    "ex_colored",
    "ex_edges",
    "ex_generalized",
    "turan_clique_count",
    "turan_graph",
    "verify_sandwich",
]
