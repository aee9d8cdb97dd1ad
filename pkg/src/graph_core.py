"""
Simple graphs, Turán-type constructions and clique counting

Graphs are immutable and store adjacency as one integer bitmask per vertex,
so neighbourhood intersections are single `&` operations. Python integers are
unbounded, which lets the same representation serve the search workloads
(n <= 12) and the symmetrization workloads (n up to a few hundred).

Constructions:
- turan_graph(n, r): complete balanced r-partite graph, part of vertex v is v % r
- join_turan(i, n, r): K_i + T(n - i, r), apex vertices are 0..i-1
- build_family(spec): named families (books, two cliques, cycles, ...)

Counting:
- count_cliques(G, k): pivot-based exact k-clique count
- turan_clique_count(n, r, k): closed form, elementary symmetric polynomial
  of the Turán part sizes

Usage:
    G = turan_graph(9, 3)
    assert count_cliques(G, 3) == turan_clique_count(9, 3, 3) == 27
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.errors import InvalidInputError, InvalidParameterError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits_above(mask: int, v: int) -> int:
    """Bits of mask strictly above position v"""
    return (mask >> (v + 1)) << (v + 1)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1"""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise InvalidInputError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        limit = 1 << self.n
        for v, mask in enumerate(self.adj):
            if mask < 0 or mask >= limit:
                raise InvalidInputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (mask >> v) & 1:
                raise InvalidInputError(f"loop at vertex {v}")
            for u in iter_bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise InvalidInputError(f"adjacency is not symmetric at {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from an edge list

        Args:
            n: Number of vertices
            edges: Pairs (u, v) with 0 <= u, v < n and u != v; repeats are merged

        Returns:
            Graph
        """
        if n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for edge in edges:
            if len(edge) != 2:
                raise InvalidInputError(f"edge {tuple(edge)} does not have two endpoints")
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidInputError(f"edge ({u}, {v}) is a loop")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in iter_bits(bits_above(self.adj[u], u))]

    def edge_count(self) -> int:
        return sum(popcount(mask) for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(mask) for mask in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def with_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """Append vertex n adjacent to the vertices in neighbor_mask"""
        new = self.n
        adj = [mask | (((neighbor_mask >> v) & 1) << new) for v, mask in enumerate(self.adj)]
        adj.append(neighbor_mask)
        return Graph(self.n + 1, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by vertices, relabelled 0.. in the given order"""
        position = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            mask = 0
            for u in iter_bits(self.adj[v]):
                if u in position:
                    mask |= 1 << position[u]
            adj.append(mask)
        return Graph(len(vertices), tuple(adj))

    def without_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]"""
        adj = [0] * self.n
        for v, mask in enumerate(self.adj):
            new_mask = 0
            for u in iter_bits(mask):
                new_mask |= 1 << perm[u]
            adj[perm[v]] = new_mask
        return Graph(self.n, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(mask << shift for mask in other.adj))

    def components(self) -> List[List[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex"""
        seen = 0
        result = []
        for start in range(self.n):
            if (seen >> start) & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            result.append(list(iter_bits(comp)))
        return result


def complete_graph(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, tuple(full & ~(1 << v) for v in range(m)))


def turan_part_sizes(n: int, r: int) -> List[int]:
    """Sizes of the r parts of T(n, r); part i holds the vertices v with v % r == i"""
    if r < 1:
        raise InvalidParameterError(f"Turán graph needs r >= 1, got r={r}")
    if n < 0:
        raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
    return [n // r + (1 if i < n % r else 0) for i in range(r)]


def turan_graph(n: int, r: int) -> Graph:
    """
    Complete balanced r-partite graph T(n, r)

    Args:
        n: Number of vertices
        r: Number of parts (>= 1); parts are assigned round-robin by vertex index

    Returns:
        Graph
    """
    turan_part_sizes(n, r)
    part_masks = [0] * r
    for v in range(n):
        part_masks[v % r] |= 1 << v
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~part_masks[v % r] for v in range(n)))


def join_turan(i: int, n: int, r: int) -> Graph:
    """
    K_i + T(n - i, r): i apex vertices (0..i-1) joined to everything

    Args:
        i: Number of apex vertices, 0 <= i <= n
        n: Total number of vertices
        r: Number of Turán parts

    Returns:
        Graph
    """
    if i < 0 or i > n:
        raise InvalidParameterError(f"join_turan needs 0 <= i <= n, got i={i}, n={n}")
    base = turan_graph(n - i, r)
    full = (1 << n) - 1
    adj = [full & ~(1 << v) for v in range(i)]
    adj.extend(((mask << i) | ((1 << i) - 1)) for mask in base.adj)
    return Graph(n, tuple(adj))


def turan_clique_count(n: int, r: int, k: int) -> int:
    """
    Exact number of K_k in T(n, r)

    The sum over k-subsets of parts of the product of their sizes, i.e. the
    k-th elementary symmetric polynomial of the part sizes.
    """
    if k < 1:
        raise InvalidParameterError(f"clique size must be >= 1, got k={k}")
    sizes = turan_part_sizes(n, r)
    # e[j] = elementary symmetric polynomial of degree j over the sizes seen so far
    e = [1] + [0] * k
    for size in sizes:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * size
    return e[k]


def join_turan_clique_count(i: int, n: int, r: int, k: int) -> int:
    """K_k count in K_i + T(n - i, r): choose j apexes and a (k - j)-clique of the Turán part"""
    if i < 0 or i > n:
        raise InvalidParameterError(f"join needs 0 <= i <= n, got i={i}, n={n}")
    total = comb(i, k)
    for j in range(min(i, k - 1) + 1):
        total += comb(i, j) * turan_clique_count(n - i, r, k - j)
    return total


def _pivot_count(adj: Sequence[int], cand: int, held: int, pivots: int, k: int) -> int:
    # Each leaf of the pivot tree stands for the cliques H + any subset of the pivots.
    if held == k:
        return 1
    if held + pivots + popcount(cand) < k:
        return 0
    if not cand:
        return comb(pivots, k - held)
    pivot, best = -1, -1
    for p in iter_bits(cand):
        d = popcount(adj[p] & cand)
        if d > best:
            pivot, best = p, d
    total = _pivot_count(adj, cand & adj[pivot], held, pivots + 1, k)
    done = 0
    for v in iter_bits(cand & ~adj[pivot] & ~(1 << pivot)):
        total += _pivot_count(adj, cand & adj[v] & ~done, held + 1, pivots, k)
        done |= 1 << v
    return total


def count_cliques_within(graph: Graph, k: int, mask: int) -> int:
    """Number of k-cliques of graph whose vertices all lie in mask"""
    if k < 1:
        raise InvalidParameterError(f"clique size must be >= 1, got k={k}")
    mask &= graph.vertex_mask
    if k == 1:
        return popcount(mask)
    total = 0
    for v in iter_bits(mask):
        total += _pivot_count(graph.adj, bits_above(graph.adj[v] & mask, v), 1, 0, k)
    return total


def count_cliques(graph: Graph, k: int) -> int:
    """
    Exact number of k-vertex complete subgraphs

    Args:
        graph: Graph to count in
        k: Clique size (>= 1); k > n gives 0

    Returns:
        Clique count
    """
    return count_cliques_within(graph, k, graph.vertex_mask)


def iter_cliques(graph: Graph, k: int, mask: Optional[int] = None) -> Iterator[int]:
    """Yield every k-clique inside mask (default: all vertices) as a vertex bitmask"""
    if k < 1:
        raise InvalidParameterError(f"clique size must be >= 1, got k={k}")
    adj = graph.adj
    start = graph.vertex_mask if mask is None else mask & graph.vertex_mask

    def extend(clique: int, cand: int, size: int) -> Iterator[int]:
        if size == k:
            yield clique
            return
        for v in iter_bits(cand):
            yield from extend(clique | (1 << v), bits_above(cand & adj[v], v), size + 1)

    yield from extend(0, start, 0)


# Named families -------------------------------------------------------------


@dataclass(frozen=True)
class Turan:
    n: int
    r: int


@dataclass(frozen=True)
class JoinTuran:
    i: int
    n: int
    r: int


@dataclass(frozen=True)
class CompleteGraph:
    m: int


@dataclass(frozen=True)
class DisjointUnion:
    parts: Tuple["GraphFamilySpec", ...]


@dataclass(frozen=True)
class BookB:
    """Two copies of K_{r+1} sharing exactly one vertex (2r + 1 vertices)"""

    r: int


@dataclass(frozen=True)
class TwoCliques2K:
    """Two vertex-disjoint copies of K_{r+1} (2r + 2 vertices)"""

    r: int


@dataclass(frozen=True)
class Cycle:
    m: int


@dataclass(frozen=True)
class Path:
    """Path on m vertices"""

    m: int


@dataclass(frozen=True)
class Custom:
    n: int
    edges: Tuple[Edge, ...]


GraphFamilySpec = Union[
    Turan, JoinTuran, CompleteGraph, DisjointUnion, BookB, TwoCliques2K, Cycle, Path, Custom
]

PETERSEN = Custom(
    10,
    tuple(
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    ),
)


def build_family(spec: GraphFamilySpec) -> Graph:
    """
    Build the graph a family spec names

    Args:
        spec: One of the family dataclasses above

    Returns:
        Graph
    """
    if isinstance(spec, Turan):
        return turan_graph(spec.n, spec.r)
    if isinstance(spec, JoinTuran):
        if spec.r < 1:
            raise InvalidParameterError(f"JoinTuran needs r >= 1, got r={spec.r}")
        return join_turan(spec.i, spec.n, spec.r)
    if isinstance(spec, CompleteGraph):
        if spec.m < 0:
            raise InvalidParameterError(f"complete graph needs m >= 0, got {spec.m}")
        return complete_graph(spec.m)
    if isinstance(spec, DisjointUnion):
        result = Graph.empty(0)
        for part in spec.parts:
            result = result.disjoint_union(build_family(part))
        return result
    if isinstance(spec, BookB):
        if spec.r < 1:
            raise InvalidParameterError(f"BookB needs r >= 1, got r={spec.r}")
        r = spec.r
        # vertex 0 is shared; 1..r and r+1..2r complete the two cliques
        first = [0] + list(range(1, r + 1))
        second = [0] + list(range(r + 1, 2 * r + 1))
        edges = list(combinations(first, 2)) + list(combinations(second, 2))
        return Graph.from_edges(2 * r + 1, edges)
    if isinstance(spec, TwoCliques2K):
        if spec.r < 1:
            raise InvalidParameterError(f"TwoCliques2K needs r >= 1, got r={spec.r}")
        clique = complete_graph(spec.r + 1)
        return clique.disjoint_union(clique)
    if isinstance(spec, Cycle):
        if spec.m < 3:
            raise InvalidParameterError(f"cycle needs m >= 3, got {spec.m}")
        return Graph.from_edges(spec.m, [(i, (i + 1) % spec.m) for i in range(spec.m)])
    if isinstance(spec, Path):
        if spec.m < 1:
            raise InvalidParameterError(f"path needs m >= 1, got {spec.m}")
        return Graph.from_edges(spec.m, [(i, i + 1) for i in range(spec.m - 1)])
    if isinstance(spec, Custom):
        return Graph.from_edges(spec.n, spec.edges)
    raise InvalidInputError(f"unknown graph family spec {spec!r}")
