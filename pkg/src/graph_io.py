"""
Serialization of graphs and hypergraphs

Graphs:
- graph6 (through networkx's encoder/decoder, no header)
- JSON edge list {"n": int, "edges": [[u, v], ...]}

Hypergraphs:
- text, one per line: "k n : v1 v2 v3 ; v1 v2 v4 ; ..."
- JSON {"n": int, "k": int, "edges": [[...], ...]}
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

import networkx as nx

from src.errors import InvalidInputError
from src.graph_core import Graph
from src.hypergraph import Hypergraph


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nodes = sorted(nx_graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))


def to_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (an optional >>graph6<< header is accepted)"""
    raw = text.strip()
    try:
        return from_networkx(nx.from_graph6_bytes(raw.encode("ascii")))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise InvalidInputError(f"invalid graph6 string {raw!r}: {exc}") from exc


def graph_to_json(graph: Graph) -> Dict[str, Any]:
    return {"n": graph.n, "edges": [list(edge) for edge in graph.edges()]}


def graph_from_json(data: Dict[str, Any]) -> Graph:
    try:
        n = int(data["n"])
        edges = [tuple(edge) for edge in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"graph JSON needs 'n' and 'edges': {exc}") from exc
    return Graph.from_edges(n, edges)


def load_graph_file(path: Union[str, Path]) -> Graph:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInputError(f"cannot read graph JSON from {path}: {exc}") from exc
    return graph_from_json(data)


def format_hypergraph(hypergraph: Hypergraph) -> str:
    body = " ; ".join(" ".join(str(v) for v in edge) for edge in hypergraph.edges)
    return f"{hypergraph.k} {hypergraph.n} : {body}".rstrip()


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the one-line text form 'k n : v1 v2 v3 ; ...'"""
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise InvalidInputError(f"hypergraph text needs 'k n : ...', got {text!r}")
    try:
        k, n = (int(token) for token in head.split())
        edges = [[int(v) for v in chunk.split()] for chunk in body.split(";") if chunk.strip()]
    except ValueError as exc:
        raise InvalidInputError(f"malformed hypergraph text {text!r}: {exc}") from exc
    return Hypergraph.from_edges(n, k, edges)


def hypergraph_to_json(hypergraph: Hypergraph) -> Dict[str, Any]:
    return {"n": hypergraph.n, "k": hypergraph.k, "edges": [list(edge) for edge in hypergraph.edges]}


def hypergraph_from_json(data: Dict[str, Any]) -> Hypergraph:
    try:
        return Hypergraph.from_edges(int(data["n"]), int(data["k"]), data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"hypergraph JSON needs 'n', 'k' and 'edges': {exc}") from exc
