"""
Zykov-style symmetrization on blue-red graphs

A move (u, S) deletes every edge at u, then joins u in blue to the common
blue neighbours of S and in red to the common red neighbours of S. The move
is kept only when g strictly increases and the graph is still F-free (any new
copy of F must pass through u, so only those copies are searched).

run_symmetrization repeats random moves from a seeded start graph; the
random stream comes from numpy's default_rng so equal seeds replay the same
move sequence. run_restarts spreads independent seeds over the worker pool.

Usage:
    state = run_symmetrization(12, 3, complete_graph(4), seed=7, budget=10_000)
    print(state.g, state.moves_applied)
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.blue_red import BlueRedGraph, g_value, vertex_g_contributions
from src.errors import InvalidParameterError, InvariantViolationError
from src.graph_core import Graph, count_cliques_within, iter_bits, popcount, turan_graph
from src.hypergraph import Hypergraph, contains_berge
from src.invariants import chromatic_number
from src.parallel import run_tasks
from src.subgraph import find_embedding, is_free

logger = logging.getLogger(__name__)

SEED_KINDS = ("turan", "greedy", "empty")


@dataclass(frozen=True)
class Move:
    u: int
    S: Tuple[int, ...]
    blue_mask: int
    red_mask: int
    g_before: int
    g_after: int


@dataclass
class SymmetrizationState:
    current: BlueRedGraph
    k: int
    forbidden: Graph
    g_history: List[Tuple[int, int]] = field(default_factory=list)
    moves_applied: int = 0
    attempts: int = 0
    seed: Optional[int] = None

    @property
    def g(self) -> int:
        return self.g_history[-1][1] if self.g_history else g_value(self.current, self.k)


def _contribution(blue: Graph, red_adj: Sequence[int], u: int, k: int) -> int:
    return count_cliques_within(blue, k - 1, blue.adj[u]) + popcount(red_adj[u])


def _rewire(adj: Sequence[int], u: int, mask: int) -> Tuple[int, ...]:
    bit = 1 << u
    result = [a & ~bit for a in adj]
    result[u] = mask
    for v in iter_bits(mask):
        result[v] |= bit
    return tuple(result)


def symmetrize_step(state: SymmetrizationState, u: int, S: Sequence[int]) -> Optional[Move]:
    """
    Evaluate the move that rebuilds u from the common neighbourhood of S

    Args:
        state: Current state (not modified)
        u: Vertex to rewire
        S: Nonempty vertex set not containing u

    Returns:
        The Move when it strictly increases g and keeps the graph F-free, else None
    """
    graph = state.current.graph
    n = graph.n
    members = tuple(sorted(set(S)))
    if not 0 <= u < n or any(not 0 <= s < n for s in members):
        raise InvalidParameterError(f"move ({u}, {members}) names a vertex outside 0..{n - 1}")
    if u in members:
        raise InvalidParameterError(f"vertex {u} cannot belong to its own template set")
    if not members:
        raise InvalidParameterError("template set must be nonempty")

    blue, red = state.current.blue_graph, state.current.red_graph
    keep = graph.vertex_mask & ~(1 << u)
    blue_mask = red_mask = keep
    for s in members:
        blue_mask &= blue.adj[s]
        red_mask &= red.adj[s]
    if blue_mask == blue.adj[u] and red_mask == red.adj[u]:
        return None

    before = _contribution(blue, red.adj, u, state.k)
    new_blue = Graph(n, _rewire(blue.adj, u, blue_mask))
    new_red_adj = _rewire(red.adj, u, red_mask)
    after = _contribution(new_blue, new_red_adj, u, state.k)
    if after <= before:
        return None
    combined = Graph(n, tuple(b | r for b, r in zip(new_blue.adj, new_red_adj)))
    if find_embedding(state.forbidden, combined, must_use=u) is not None:
        return None
    g_before = state.g
    return Move(u, members, blue_mask, red_mask, g_before, g_before - before + after)


def apply_move(state: SymmetrizationState, move: Move) -> None:
    graph = state.current.graph
    blue, red = state.current.blue_graph, state.current.red_graph
    blue_adj = _rewire(blue.adj, move.u, move.blue_mask)
    red_adj = _rewire(red.adj, move.u, move.red_mask)
    combined = Graph(graph.n, tuple(b | r for b, r in zip(blue_adj, red_adj)))
    red_edges = Graph(graph.n, red_adj).edges()
    state.current = BlueRedGraph(combined, frozenset(red_edges))
    state.moves_applied += 1
    state.g_history.append((state.attempts, move.g_after))


def _seed_graph(n: int, k: int, forbidden: Graph, chi: int, rng: np.random.Generator, kind: str) -> BlueRedGraph:
    if kind == "empty":
        return BlueRedGraph.all_blue(Graph.empty(n))
    if kind == "turan":
        r = max(chi - 1, 1)
        # random balanced partition: T(n, r) under a random relabelling
        perm = [int(p) for p in rng.permutation(n)]
        return BlueRedGraph.all_blue(turan_graph(n, r).relabel(perm))
    if kind == "greedy":
        pairs = list(combinations(range(n), 2))
        graph = Graph.empty(n)
        for index in rng.permutation(len(pairs)):
            u, v = pairs[int(index)]
            candidate = graph.with_edge(u, v)
            if find_embedding(forbidden, candidate, must_use=u) is None:
                graph = candidate
        red = [
            (u, v) for u, v in graph.edges()
            if count_cliques_within(graph, k - 2, graph.adj[u] & graph.adj[v]) == 0
        ]
        return BlueRedGraph.with_red(graph, red)
    raise InvalidParameterError(f"seed kind must be one of {SEED_KINDS}, got {kind!r}")


def run_symmetrization(
    n: int,
    k: int,
    forbidden: Graph,
    seed: int,
    budget: int,
    seed_kind: str = "turan",
) -> SymmetrizationState:
    """
    Random symmetrization moves from a seeded start graph

    Args:
        n: Vertex count
        k: Clique size of the objective, >= 3
        forbidden: F
        seed: Seed for numpy's default_rng
        budget: Number of move attempts
        seed_kind: "turan" (random balanced (chi(F) - 1)-partite, all blue),
            "greedy" (random maximal F-free graph, edges in no k-clique red)
            or "empty"

    Returns:
        Final state; g_history holds (attempt, g) at the start and after each accepted move
    """
    if k < 3:
        raise InvalidParameterError(f"symmetrization needs k >= 3, got k={k}")
    if n < 0 or budget < 0:
        raise InvalidParameterError(f"n and budget must be >= 0, got n={n}, budget={budget}")
    chi = chromatic_number(forbidden)
    if chi <= k:
        logger.warning("chi(F)=%d <= k=%d: degenerate regime, the Berge number is o(n^k)", chi, k)
    rng = np.random.default_rng(seed)
    start = _seed_graph(n, k, forbidden, chi, rng, seed_kind)
    state = SymmetrizationState(start, k, forbidden, [(0, g_value(start, k))], seed=seed)

    max_size = min(forbidden.n, n - 1)
    if max_size >= 1:
        weights = np.array(vertex_g_contributions(start, k), dtype=float) + 1.0
        for attempt in range(1, budget + 1):
            state.attempts = attempt
            u = int(rng.integers(n))
            size = int(rng.integers(1, max_size + 1))
            others = np.delete(np.arange(n), u)
            p = np.delete(weights, u)
            S = rng.choice(others, size=size, replace=False, p=p / p.sum())
            move = symmetrize_step(state, u, [int(s) for s in S])
            if move is not None:
                apply_move(state, move)
                weights = np.array(vertex_g_contributions(state.current, k), dtype=float) + 1.0
    state.attempts = budget

    if not is_free(state.current.graph, forbidden):
        raise InvariantViolationError(f"symmetrization seed {seed} ended with a copy of the forbidden graph")
    if state.g != g_value(state.current, k):
        raise InvariantViolationError(f"symmetrization seed {seed}: tracked g {state.g} disagrees with recount")
    logger.info("symmetrization seed=%s: g %d -> %d in %d moves", seed, state.g_history[0][1], state.g, state.moves_applied)
    return state


def _restart(task: Tuple[int, int, Graph, int, int, str]) -> SymmetrizationState:
    n, k, forbidden, seed, budget, seed_kind = task
    return run_symmetrization(n, k, forbidden, seed, budget, seed_kind)


def run_restarts(
    n: int,
    k: int,
    forbidden: Graph,
    seeds: Sequence[int],
    budget: int,
    workers: int = 1,
    seed_kind: str = "turan",
    progress: bool = False,
) -> Tuple[SymmetrizationState, List[SymmetrizationState]]:
    """
    Independent restarts, one per seed

    Returns:
        (best state: max g, ties to the smallest seed; all states in seed order)
    """
    if not seeds:
        raise InvalidParameterError("at least one seed is required")
    ordered = sorted(seeds)
    states = run_tasks(
        _restart,
        [(n, k, forbidden, seed, budget, seed_kind) for seed in ordered],
        workers=workers,
        progress=progress,
        desc="restarts",
    )
    best = max(states, key=lambda s: (s.g, -s.seed))
    return best, states


def symmetrize_hypergraph_step(
    hypergraph: Hypergraph, forbidden: Graph, u: int, S: Sequence[int]
) -> Optional[Hypergraph]:
    """
    Hypergraph version of the move

    Every hyperedge at u is removed; each hyperedge avoiding u that contains
    exactly one vertex v of S is copied with v replaced by u. The result is
    returned only when it has strictly more hyperedges and no Berge copy of F.
    """
    members = set(S)
    if u in members:
        raise InvalidParameterError(f"vertex {u} cannot belong to its own template set")
    if not members:
        raise InvalidParameterError("template set must be nonempty")
    kept = [edge for edge in hypergraph.edges if u not in edge]
    added = set()
    for edge in kept:
        hits = members.intersection(edge)
        if len(hits) == 1:
            (v,) = hits
            added.add(tuple(sorted(u if w == v else w for w in edge)))
    result = Hypergraph.from_edges(hypergraph.n, hypergraph.k, set(kept) | added)
    if result.edge_count() <= hypergraph.edge_count():
        return None
    if contains_berge(result, forbidden) is not None:
        return None
    return result
