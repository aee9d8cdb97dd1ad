"""
Canonical labelling of small graphs

Individualization-refinement: the vertex partition is refined by neighbour
counts into each cell until it is equitable, then the search tree
individualizes one vertex of the first smallest non-singleton cell at a time.
Every discrete leaf gives a relabelling; the certificate is the smallest
upper-triangle adjacency encoding over all leaves. Automorphisms discovered
when two leaves encode identically prune sibling branches in the same orbit.

Usage:
    form = canonical_form(G)
    same_class = form.certificate == canonical_form(H).certificate
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph_core import Graph, popcount

Cells = List[List[int]]


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical relabelling plus the certificate of the isomorphism class"""

    label_permutation: Tuple[int, ...]
    certificate: bytes

    def hex(self) -> str:
        return self.certificate.hex()


def _refine(adj: Sequence[int], cells: Cells) -> Cells:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                signature = tuple(popcount(adj[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        cells = refined
        if not changed:
            return cells


def _encode(graph: Graph, perm: Sequence[int]) -> int:
    inverse = [0] * graph.n
    for v, position in enumerate(perm):
        inverse[position] = v
    code = 0
    for j in range(1, graph.n):
        row = graph.adj[inverse[j]]
        for i in range(j):
            code = (code << 1) | ((row >> inverse[i]) & 1)
    return code


def _orbit_roots(n: int, generators: List[Tuple[int, ...]]) -> List[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for v, w in enumerate(gamma):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.best_code: Optional[int] = None
        self.best_perm: Tuple[int, ...] = ()
        self.automorphisms: List[Tuple[int, ...]] = []

    def leaf(self, cells: Cells) -> None:
        perm = [0] * self.graph.n
        for position, cell in enumerate(cells):
            perm[cell[0]] = position
        code = _encode(self.graph, perm)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_perm = code, tuple(perm)
        elif code == self.best_code:
            inverse_best = [0] * self.graph.n
            for v, position in enumerate(self.best_perm):
                inverse_best[position] = v
            self.automorphisms.append(tuple(inverse_best[perm[v]] for v in range(self.graph.n)))

    def run(self, cells: Cells, prefix: Tuple[int, ...]) -> None:
        if len(cells) == self.graph.n:
            self.leaf(cells)
            return
        target = min(
            (i for i, cell in enumerate(cells) if len(cell) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        cell = cells[target]
        tried: List[int] = []
        for v in cell:
            if tried:
                stabilizing = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
                if stabilizing:
                    roots = _orbit_roots(self.graph.n, stabilizing)
                    if any(roots[v] == roots[t] for t in tried):
                        continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.run(_refine(self.graph.adj, child), prefix + (v,))


def canonical_form(graph: Graph) -> CanonicalForm:
    """
    Canonical labelling and isomorphism-class certificate

    Args:
        graph: Graph to canonicalize

    Returns:
        CanonicalForm; label_permutation[v] is the canonical position of v
    """
    n = graph.n
    search = _Search(graph)
    if n > 0:
        search.run(_refine(graph.adj, [list(range(n))]), ())
    code = search.best_code or 0
    width = (n * (n - 1) // 2 + 7) // 8
    certificate = n.to_bytes(2, "big") + code.to_bytes(width, "big")
    return CanonicalForm(search.best_perm, certificate)


def canonical_graph(graph: Graph) -> Graph:
    """The canonical representative of graph's isomorphism class"""
    return graph.relabel(canonical_form(graph).label_permutation)


def are_isomorphic(first: Graph, second: Graph) -> bool:
    return canonical_form(first).certificate == canonical_form(second).certificate
