"""
Uniform hypergraphs and Berge-copy detection

A hypergraph H contains a Berge-F when the vertices of F embed injectively
into V(H) and the edges of F can be assigned to pairwise distinct hyperedges,
each containing the images of its edge's endpoints.

Detection (contains_berge):
1. Embed F's vertices one at a time (connectivity-first, degree-descending).
   A candidate image must share a hyperedge with the images of all placed
   neighbours and lie in at least deg_F hyperedges.
2. Forward check: every unplaced neighbour keeps a candidate.
3. After each placement, the F-edges with both ends placed must still admit
   a matching into distinct hyperedges (augmenting paths); at the full
   embedding this matching is the Berge witness.

contains_berge_oracle enumerates every injection and every distinct
hyperedge assignment and is only meant for cross-checking on tiny inputs.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.errors import CapExceededError, InvalidInputError, InvalidParameterError
from src.graph_core import Edge, Graph, iter_bits, iter_cliques
from src.subgraph import embedding_order

HyperEdge = Tuple[int, ...]

ORACLE_MAX_EDGES = 8
ORACLE_MAX_VERTICES = 8


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph on 0..n-1 with hyperedges as sorted tuples"""

    n: int
    k: int
    edges: Tuple[HyperEdge, ...]

    def __post_init__(self):
        if self.k < 2:
            raise InvalidInputError(f"uniformity must be >= 2, got k={self.k}")
        if self.n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {self.n}")
        for edge in self.edges:
            if len(edge) != self.k or len(set(edge)) != self.k:
                raise InvalidInputError(f"hyperedge {edge} does not have {self.k} distinct vertices")
            if tuple(sorted(edge)) != edge:
                raise InvalidInputError(f"hyperedge {edge} is not sorted")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise InvalidInputError(f"hyperedge {edge} has a vertex outside 0..{self.n - 1}")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidInputError("hyperedges must be pairwise distinct")

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """Normalize hyperedges to sorted tuples in lexicographic order"""
        normalized = sorted(tuple(sorted(int(v) for v in edge)) for edge in edges)
        return cls(n, k, tuple(normalized))

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def pair_index(self) -> Dict[Edge, Tuple[int, ...]]:
        """Map each vertex pair (a < b) to the indices of hyperedges containing it"""
        index: Dict[Edge, List[int]] = {}
        for i, edge in enumerate(self.edges):
            for pair in combinations(edge, 2):
                index.setdefault(pair, []).append(i)
        return {pair: tuple(ids) for pair, ids in index.items()}

    @cached_property
    def shadow_adj(self) -> Tuple[int, ...]:
        """Bitmask of vertices sharing at least one hyperedge with each vertex"""
        adj = [0] * self.n
        for a, b in self.pair_index:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return tuple(adj)

    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> List[int]:
        counts = [0] * self.n
        for edge in self.edges:
            for v in edge:
                counts[v] += 1
        return counts

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def hyperedges_at(self, pair: Edge) -> Tuple[int, ...]:
        a, b = pair
        return self.pair_index.get((a, b) if a < b else (b, a), ())

    def with_edge(self, edge: Sequence[int]) -> "Hypergraph":
        return Hypergraph.from_edges(self.n, self.k, self.edges + (tuple(edge),))

    def is_subhypergraph_of(self, other: "Hypergraph") -> bool:
        return self.n == other.n and self.k == other.k and self.edge_set <= other.edge_set


@dataclass(frozen=True)
class BergeWitness:
    """Vertex embedding of F plus the distinct hyperedge chosen for each F-edge"""

    vertex_embedding: Tuple[int, ...]
    edge_assignment: Tuple[Tuple[Edge, HyperEdge], ...]

    def as_dict(self) -> dict:
        return {
            "vertex_embedding": list(self.vertex_embedding),
            "edge_assignment": [[list(edge), list(hyperedge)] for edge, hyperedge in self.edge_assignment],
        }


def validate_berge_witness(hypergraph: Hypergraph, forbidden: Graph, witness: BergeWitness) -> bool:
    """Check a witness from scratch: injective embedding, containment, distinct hyperedges"""
    embedding = witness.vertex_embedding
    if len(embedding) != forbidden.n or len(set(embedding)) != forbidden.n:
        return False
    if any(not 0 <= v < hypergraph.n for v in embedding):
        return False
    assigned = dict(witness.edge_assignment)
    if set(assigned) != set(forbidden.edges()):
        return False
    if len(set(assigned.values())) != len(assigned):
        return False
    for (u, v), hyperedge in assigned.items():
        if hyperedge not in hypergraph.edge_set:
            return False
        if embedding[u] not in hyperedge or embedding[v] not in hyperedge:
            return False
    return True


def max_matching(left_adj: Sequence[Sequence[int]]) -> Dict[int, int]:
    """
    Maximum bipartite matching by augmenting paths

    Args:
        left_adj: For each left vertex, the right vertices it may be matched to

    Returns:
        Dict left vertex -> matched right vertex
    """
    match_right: Dict[int, int] = {}

    def augment(u: int, seen: Set[int]) -> bool:
        for h in left_adj[u]:
            if h in seen:
                continue
            seen.add(h)
            if h not in match_right or augment(match_right[h], seen):
                match_right[h] = u
                return True
        return False

    for u in range(len(left_adj)):
        augment(u, set())
    return {u: h for h, u in match_right.items()}


class _BergeSearch:
    def __init__(self, hypergraph: Hypergraph, forbidden: Graph):
        self.hypergraph = hypergraph
        self.forbidden = forbidden
        self.f_edges = forbidden.edges()
        self.host_degrees = hypergraph.degrees()
        self.f_degrees = forbidden.degrees()
        self.image = [-1] * forbidden.n

    def candidates(self, x: int, used: int) -> int:
        mask = ((1 << self.hypergraph.n) - 1) & ~used
        for y in iter_bits(self.forbidden.adj[x]):
            if self.image[y] >= 0:
                mask &= self.hypergraph.shadow_adj[self.image[y]]
        for g in iter_bits(mask):
            if self.host_degrees[g] < self.f_degrees[x]:
                mask &= ~(1 << g)
        return mask

    def matching(self) -> Optional[Dict[int, int]]:
        placed = [i for i, (u, v) in enumerate(self.f_edges) if self.image[u] >= 0 and self.image[v] >= 0]
        left_adj = [self.hypergraph.hyperedges_at((self.image[u], self.image[v])) for u, v in (self.f_edges[i] for i in placed)]
        matched = max_matching(left_adj)
        if len(matched) < len(placed):
            return None
        return {placed[i]: h for i, h in matched.items()}

    def run(self, order: Sequence[int], pinned: Dict[int, int]) -> Optional[BergeWitness]:
        self.image = [-1] * self.forbidden.n

        def extend(i: int, used: int) -> Optional[Dict[int, int]]:
            if i == len(order):
                return self.matching()
            x = order[i]
            cand = self.candidates(x, used)
            if x in pinned:
                cand &= 1 << pinned[x]
            for g in iter_bits(cand):
                self.image[x] = g
                now_used = used | (1 << g)
                neighbours_ok = all(
                    self.candidates(y, now_used) for y in iter_bits(self.forbidden.adj[x]) if self.image[y] < 0
                )
                if neighbours_ok and self.matching() is not None:
                    found = extend(i + 1, now_used)
                    if found is not None:
                        return found
                self.image[x] = -1
            return None

        assignment = extend(0, 0)
        if assignment is None:
            return None
        edges = self.hypergraph.edges
        return BergeWitness(
            vertex_embedding=tuple(self.image),
            edge_assignment=tuple((self.f_edges[i], edges[assignment[i]]) for i in range(len(self.f_edges))),
        )


def contains_berge(
    hypergraph: Hypergraph, forbidden: Graph, through: Optional[Sequence[int]] = None
) -> Optional[BergeWitness]:
    """
    Search hypergraph for a Berge copy of forbidden

    Args:
        hypergraph: k-uniform host H
        forbidden: Graph F with at least one edge
        through: Optional hyperedge of H; only copies whose first embedded F-edge
            lands inside it are searched (enough to detect copies created by
            adding this hyperedge to a Berge-F-free hypergraph)

    Returns:
        BergeWitness, or None when H is Berge-F-free
    """
    if forbidden.edge_count() == 0:
        raise InvalidInputError("forbidden graph has no edges, a Berge copy would be vacuous")
    if forbidden.edge_count() > hypergraph.edge_count() or forbidden.n > hypergraph.n:
        return None
    search = _BergeSearch(hypergraph, forbidden)
    if through is None:
        return search.run(embedding_order(forbidden), {})
    for a, b in forbidden.edges():
        order = embedding_order(forbidden, [a, b])
        for x, y in permutations(through, 2):
            found = search.run(order, {a: x, b: y})
            if found is not None:
                return found
    return None


def contains_berge_oracle(hypergraph: Hypergraph, forbidden: Graph) -> bool:
    """Exhaustive Berge-F test over all injections and distinct hyperedge assignments"""
    if forbidden.edge_count() > ORACLE_MAX_EDGES or hypergraph.n > ORACLE_MAX_VERTICES:
        raise CapExceededError(
            f"oracle guard: needs |E(F)| <= {ORACLE_MAX_EDGES} and |V(H)| <= {ORACLE_MAX_VERTICES}"
        )
    if forbidden.edge_count() == 0:
        raise InvalidInputError("forbidden graph has no edges, a Berge copy would be vacuous")
    f_edges = forbidden.edges()
    for embedding in permutations(range(hypergraph.n), forbidden.n):
        choices = [
            [h for h in hypergraph.edges if embedding[u] in h and embedding[v] in h] for u, v in f_edges
        ]
        if any(not options for options in choices):
            continue
        for assignment in product(*choices):
            if len(set(assignment)) == len(assignment):
                return True
    return False


def expansion(forbidden: Graph, k: int) -> Hypergraph:
    """
    The k-uniform expansion F^{+k}

    Each edge of F gets k - 2 fresh vertices, numbered after V(F) in
    lexicographic edge order.
    """
    if k < 2:
        raise InvalidParameterError(f"expansion needs k >= 2, got k={k}")
    edges = forbidden.edges()
    extra = k - 2
    hyperedges = []
    for i, (u, v) in enumerate(edges):
        start = forbidden.n + i * extra
        hyperedges.append((u, v) + tuple(range(start, start + extra)))
    return Hypergraph.from_edges(forbidden.n + extra * len(edges), k, hyperedges)


def clique_hypergraph(graph: Graph, k: int) -> Hypergraph:
    """Hypergraph whose hyperedges are the k-cliques of graph"""
    if k < 2:
        raise InvalidParameterError(f"clique hypergraph needs k >= 2, got k={k}")
    return Hypergraph.from_edges(graph.n, k, (tuple(iter_bits(c)) for c in iter_cliques(graph, k)))
