"""
Subgraph (monomorphism) search for F-freeness checks

Backtracking over the vertices of the pattern F in a connectivity-first,
degree-descending order. Candidates for a pattern vertex are host vertices of
large enough degree adjacent to the images of its already placed neighbours;
after each placement every unplaced neighbour must keep at least one
candidate (forward checking).
"""
from typing import List, Optional, Sequence, Tuple

from src.graph_core import Graph, iter_bits, popcount


def embedding_order(pattern: Graph, start: Sequence[int] = ()) -> List[int]:
    """
    Order pattern vertices so each one has as many placed neighbours as possible

    Args:
        pattern: Graph whose vertices are ordered
        start: Vertices forced to the front, in this order

    Returns:
        Permutation of range(pattern.n)
    """
    order = list(start)
    placed = 0
    for v in order:
        placed |= 1 << v
    degrees = pattern.degrees()
    while len(order) < pattern.n:
        best = max(
            (v for v in range(pattern.n) if not (placed >> v) & 1),
            key=lambda v: (popcount(pattern.adj[v] & placed), degrees[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def _search(pattern: Graph, host: Graph, order: Sequence[int], pinned: Optional[int]) -> Optional[Tuple[int, ...]]:
    host_degrees = host.degrees()
    pattern_degrees = pattern.degrees()
    degree_ok = []
    for x in range(pattern.n):
        mask = 0
        for g in range(host.n):
            if host_degrees[g] >= pattern_degrees[x]:
                mask |= 1 << g
        degree_ok.append(mask)
    image = [-1] * pattern.n

    def candidates(x: int, used: int) -> int:
        mask = degree_ok[x] & ~used
        for y in iter_bits(pattern.adj[x]):
            if image[y] >= 0:
                mask &= host.adj[image[y]]
        return mask

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        cand = candidates(x, used)
        if i == 0 and pinned is not None:
            cand &= 1 << pinned
        for g in iter_bits(cand):
            image[x] = g
            now_used = used | (1 << g)
            if all(candidates(y, now_used) for y in iter_bits(pattern.adj[x]) if image[y] < 0):
                if extend(i + 1, now_used):
                    return True
            image[x] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def find_embedding(pattern: Graph, host: Graph, must_use: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Find an injective edge-preserving map from pattern into host

    Args:
        pattern: The forbidden graph F
        host: Graph searched for a copy of F (not necessarily induced)
        must_use: If given, only copies containing this host vertex count

    Returns:
        Tuple mapping each pattern vertex to its host vertex, or None
    """
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return None
    if must_use is None:
        return _search(pattern, host, embedding_order(pattern), None)
    host_degree = host.degree(must_use)
    for x in range(pattern.n):
        if pattern.degree(x) > host_degree:
            continue
        found = _search(pattern, host, embedding_order(pattern, [x]), must_use)
        if found is not None:
            return found
    return None


def is_free(host: Graph, pattern: Graph) -> bool:
    """True when host contains no (not necessarily induced) copy of pattern"""
    return find_embedding(pattern, host) is None
