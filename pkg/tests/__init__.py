"""
Test package for the Berge-Turán toolkit

Test suites included:
- test_graph_core, test_canonical, test_subgraph, test_graph_io: graph layer
- test_hypergraph: Berge detection against an exhaustive oracle
- test_invariants, test_blue_red: chromatic invariants and the colored objective
- test_enumeration, test_extremal: class enumeration and exact searches
- test_symmetrizer, test_inequality, test_conjecture: heuristics and exact arithmetic
- test_cache, test_config, test_cli: plumbing

Run all tests:
    pytest tests/ -v

Skip acceptance-scale runs:
    pytest tests/ -m "not slow"
"""
