"""
Blue-red graphs and the colored objective g

g(G) = number of k-cliques whose edges are all blue + number of red edges.

best_red_coloring finds, for a fixed graph, the colouring maximizing g:
edges lying in no k-clique are always red (each adds 1 and costs nothing);
the remaining edges are branched blue/red, bounded by
    red so far + undecided edges + cliques not yet touched by red.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.errors import InvalidInputError, InvalidParameterError
from src.graph_core import Edge, Graph, count_cliques, count_cliques_within, iter_bits, iter_cliques, popcount


def _normalize(edge: Iterable[int]) -> Edge:
    u, v = edge
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class BlueRedGraph:
    """A graph with each edge coloured blue or red"""

    graph: Graph
    red_edges: FrozenSet[Edge]

    def __post_init__(self):
        for u, v in self.red_edges:
            if u >= v or not self.graph.has_edge(u, v):
                raise InvalidInputError(f"red edge ({u}, {v}) is not an edge of the graph")

    @classmethod
    def all_blue(cls, graph: Graph) -> "BlueRedGraph":
        return cls(graph, frozenset())

    @classmethod
    def with_red(cls, graph: Graph, red: Iterable[Iterable[int]]) -> "BlueRedGraph":
        return cls(graph, frozenset(_normalize(edge) for edge in red))

    @cached_property
    def blue_graph(self) -> Graph:
        result = self.graph
        for u, v in self.red_edges:
            result = result.without_edge(u, v)
        return result

    @cached_property
    def red_graph(self) -> Graph:
        return Graph.from_edges(self.graph.n, self.red_edges)

    def sorted_red_edges(self) -> List[Edge]:
        return sorted(self.red_edges)


def _check_k(k: int) -> None:
    if k < 3:
        raise InvalidParameterError(f"the colored objective needs k >= 3, got k={k}")


def g_value(colored: BlueRedGraph, k: int) -> int:
    """Blue k-cliques plus red edges"""
    _check_k(k)
    return count_cliques(colored.blue_graph, k) + len(colored.red_edges)


def vertex_g_contributions(colored: BlueRedGraph, k: int) -> List[int]:
    """Per vertex: blue k-cliques through it plus red edges at it"""
    _check_k(k)
    blue, red = colored.blue_graph, colored.red_graph
    return [count_cliques_within(blue, k - 1, blue.adj[v]) + red.degree(v) for v in range(blue.n)]


def best_red_coloring(graph: Graph, k: int, at_least: Optional[int] = None) -> Optional[Tuple[int, FrozenSet[Edge]]]:
    """
    Exact maximum of g over all blue/red colourings of a fixed graph

    Args:
        graph: Uncoloured graph
        k: Clique size (>= 3)
        at_least: If given, branches that cannot reach this value are cut and
            None is returned when the optimum is below it

    Returns:
        (g value, red edge set) or None
    """
    _check_k(k)
    index: Dict[Edge, int] = {}
    clique_masks: List[int] = []
    for clique in iter_cliques(graph, k):
        mask = 0
        for pair in combinations(iter_bits(clique), 2):
            mask |= 1 << index.setdefault(pair, len(index))
        clique_masks.append(mask)
    free_red = graph.edge_count() - len(index)
    m = len(index)
    if at_least is not None and free_red + m + len(clique_masks) < at_least:
        return None

    participation = [0] * m
    for mask in clique_masks:
        for i in iter_bits(mask):
            participation[i] += 1
    by_index = {i: edge for edge, i in index.items()}
    order = sorted(range(m), key=lambda i: (-participation[i], by_index[i]))
    floor = -1 if at_least is None else at_least - free_red - 1

    if m >= len(clique_masks):
        best_value, best_red = m, (1 << m) - 1
    else:
        best_value, best_red = len(clique_masks), 0

    def alive(red: int) -> int:
        return sum(1 for mask in clique_masks if not mask & red)

    def branch(i: int, red: int) -> None:
        nonlocal best_value, best_red
        bound = popcount(red) + (m - i) + alive(red)
        if bound <= best_value or bound <= floor:
            return
        if i == m:
            best_value, best_red = bound, red
            return
        edge_bit = 1 << order[i]
        branch(i + 1, red)
        branch(i + 1, red | edge_bit)

    branch(0, 0)
    if best_value <= floor:
        return None
    red_edges = {by_index[i] for i in iter_bits(best_red)}
    red_edges.update(edge for edge in graph.edges() if edge not in index)
    return free_red + best_value, frozenset(red_edges)
