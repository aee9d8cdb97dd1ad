"""
Chromatic invariants of the forbidden graph

- chromatic_number: exact, Zykov-tree branch and bound (merge / link a
  non-adjacent pair) with a maximum-clique lower bound and a DSATUR upper bound
- sigma: smallest colour class over all proper chi(F)-colourings
- chromatic_profile: chi, sigma and the colour-critical edges and vertices,
  found by recomputing chi after every single deletion
"""
from dataclasses import dataclass
from typing import List, Tuple

from src.errors import CapExceededError, InvalidInputError
from src.graph_core import Edge, Graph, iter_bits, popcount

SIGMA_MAX_VERTICES = 12


@dataclass(frozen=True)
class ChromaticProfile:
    chi: int
    sigma: int
    critical_edges: Tuple[Edge, ...]
    critical_vertices: Tuple[int, ...]

    @property
    def has_critical_edge(self) -> bool:
        return bool(self.critical_edges)

    @property
    def has_critical_vertex(self) -> bool:
        return bool(self.critical_vertices)

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "sigma": self.sigma,
            "critical_edges": [list(edge) for edge in self.critical_edges],
            "critical_vertices": list(self.critical_vertices),
        }


def max_clique_size(graph: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        for v in iter_bits(cand):
            if size + popcount(cand) <= best:
                return
            expand(size + 1, cand & graph.adj[v])
            cand &= ~(1 << v)

    expand(0, graph.vertex_mask)
    return best


def dsatur_coloring(graph: Graph) -> List[int]:
    """Greedy DSATUR colouring; returns a colour per vertex"""
    colors = [-1] * graph.n
    neighbour_colors: List[set] = [set() for _ in range(graph.n)]
    degrees = graph.degrees()
    for _ in range(graph.n):
        v = max(
            (u for u in range(graph.n) if colors[u] < 0),
            key=lambda u: (len(neighbour_colors[u]), degrees[u], -u),
        )
        color = 0
        while color in neighbour_colors[v]:
            color += 1
        colors[v] = color
        for u in iter_bits(graph.adj[v]):
            neighbour_colors[u].add(color)
    return colors


def _contract(graph: Graph, u: int, v: int) -> Graph:
    adj = list(graph.adj)
    adj[u] |= adj[v]
    for w in iter_bits(adj[v]):
        adj[w] |= 1 << u
    adj[u] &= ~((1 << u) | (1 << v))
    return Graph(graph.n, tuple(adj)).without_vertex(v)


def _zykov(graph: Graph, best: int) -> int:
    lower = max_clique_size(graph)
    if lower >= best:
        return best
    best = min(best, max(dsatur_coloring(graph), default=-1) + 1)
    if lower >= best:
        return best
    degrees = graph.degrees()
    u = max((w for w in range(graph.n) if degrees[w] < graph.n - 1), key=lambda w: (degrees[w], -w))
    non_neighbours = graph.vertex_mask & ~graph.adj[u] & ~(1 << u)
    v = max(iter_bits(non_neighbours), key=lambda w: (popcount(graph.adj[w] & graph.adj[u]), -w))
    best = _zykov(_contract(graph, u, v), best)
    return _zykov(graph.with_edge(u, v), best)


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number (0 for the empty graph)"""
    if graph.n == 0:
        return 0
    return _zykov(graph, graph.n + 1)


def sigma(graph: Graph) -> int:
    """
    Smallest colour class over all proper colourings with exactly chi colours

    Args:
        graph: Nonempty graph with at most SIGMA_MAX_VERTICES vertices

    Returns:
        sigma(F)
    """
    if graph.n == 0:
        raise InvalidInputError("sigma is undefined for the graph with no vertices")
    if graph.n > SIGMA_MAX_VERTICES:
        raise CapExceededError(f"sigma is computed only for at most {SIGMA_MAX_VERTICES} vertices")
    chi = chromatic_number(graph)
    degrees = graph.degrees()
    order = sorted(range(graph.n), key=lambda v: (-degrees[v], v))
    colors = [-1] * graph.n
    sizes = [0] * chi
    best = graph.n

    def lower_bound(used: int) -> int:
        return min(sizes[:used]) if used == chi else 1

    def assign(i: int, used: int) -> None:
        nonlocal best
        if best == 1 or lower_bound(used) >= best:
            return
        if graph.n - i < chi - used:
            return
        if i == graph.n:
            best = min(sizes)
            return
        v = order[i]
        taken = {colors[u] for u in iter_bits(graph.adj[v])}
        # colours beyond the first unused one are symmetric
        for color in range(min(used + 1, chi)):
            if color in taken:
                continue
            colors[v] = color
            sizes[color] += 1
            assign(i + 1, max(used, color + 1))
            sizes[color] -= 1
            colors[v] = -1

    assign(0, 0)
    return best


def critical_edges(graph: Graph) -> Tuple[Edge, ...]:
    """Edges whose deletion lowers the chromatic number"""
    chi = chromatic_number(graph)
    return tuple(e for e in graph.edges() if chromatic_number(graph.without_edge(*e)) < chi)


def critical_vertices(graph: Graph) -> Tuple[int, ...]:
    """Vertices whose deletion lowers the chromatic number"""
    chi = chromatic_number(graph)
    return tuple(v for v in range(graph.n) if chromatic_number(graph.without_vertex(v)) < chi)


def chromatic_profile(graph: Graph) -> ChromaticProfile:
    """chi, sigma and the exact colour-critical edge and vertex sets"""
    return ChromaticProfile(chromatic_number(graph), sigma(graph), critical_edges(graph), critical_vertices(graph))
