"""
Exact extremal numbers at desk scale

- ex_edges(n, F):          max |E(G)| over n-vertex F-free graphs
- ex_generalized(n, k, F): max number of K_k over n-vertex F-free graphs
- ex_colored(n, k, F):     max g over n-vertex F-free blue-red graphs
- ex_berge(n, k, F):       max hyperedge count of a k-uniform Berge-F-free hypergraph
- verify_sandwich:         all four at once plus the chain
      ex(n, K_k, F) <= ex_k(n, Berge-F) <= ex^col(n, F) <= ex(n, K_k, F) + ex(n, F)

Graph problems share one engine. All three objectives only grow when an edge
is added, so an optimum is attained by some F-free graph whose last vertex has
a maximal F-free neighbourhood. The engine takes every F-free class on n - 1
vertices (see enumeration) and searches the neighbourhoods of the new vertex
include-first, cutting a branch once even its full completion is below the
incumbent. Only strict cuts are made, so every optimal leaf is reached and the
smallest canonical certificate among them is a stable witness.

The hypergraph search adds k-subsets in lexicographic order, fixes the first
hyperedge to {0, ..., k-1} and splits the tree on the second hyperedge; each
new hyperedge is tested only for Berge copies passing through it.

Usage:
    result = ex_generalized(6, 3, complete_graph(4))
    assert result.value == 8
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from src.blue_red import BlueRedGraph, best_red_coloring, g_value, vertex_g_contributions
from src.canonical import canonical_form, canonical_graph
from src.config import RunConfig
from src.enumeration import free_classes
from src.errors import CapExceededError, InvalidInputError, InvalidParameterError, InvariantViolationError
from src.graph_core import Graph, count_cliques, count_cliques_within, iter_bits, popcount
from src.graph_io import format_hypergraph
from src.hypergraph import HyperEdge, Hypergraph, contains_berge
from src.parallel import current_incumbent, run_tasks
from src.subgraph import find_embedding, is_free

logger = logging.getLogger(__name__)

MAX_BERGE_UNIFORMITY = 5

Witness = Union[Graph, BlueRedGraph, Hypergraph]


class Problem(str, Enum):
    EDGE_TURAN = "ex"
    GENERALIZED_TURAN = "ex-gen"
    COLORED_TURAN = "ex-col"
    BERGE_TURAN = "ex-berge"


@dataclass
class ExtremalResult:
    """Optimum of one extremal problem together with a witness attaining it"""

    problem: Problem
    n: int
    k: Optional[int]
    forbidden: Graph
    value: int
    witness: Witness
    witness_certificate: str
    nodes_explored: int = 0
    wall_time: float = 0.0
    min_degree: Optional[int] = None
    from_cache: bool = False

    @property
    def forbidden_certificate(self) -> str:
        return canonical_form(self.forbidden).hex()

    def as_dict(self) -> dict:
        return {
            "problem": self.problem.value,
            "n": self.n,
            "k": self.k,
            "forbidden": self.forbidden_certificate,
            "value": self.value,
            "witness_certificate": self.witness_certificate,
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "min_degree": self.min_degree,
            "from_cache": self.from_cache,
        }


class _Branch(NamedTuple):
    value: int
    certificate: bytes
    witness: Optional[Witness]
    nodes: int


def _require_edge(forbidden: Graph) -> None:
    if forbidden.edge_count() == 0:
        raise InvalidInputError("forbidden graph must have at least one edge")


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
    if n > cap:
        raise CapExceededError(f"{what} is capped at n <= {cap}, got n={n}")


# Graph problems ---------------------------------------------------------------


def _best_extension(task: Tuple[Problem, Optional[int], Graph, Graph]) -> _Branch:
    problem, k, forbidden, parent = task
    incumbent = current_incumbent()
    new = parent.n
    everything = (1 << parent.n) - 1
    base_edges = parent.edge_count()
    base_cliques = count_cliques(parent, k) if k is not None else 0

    def optimistic(mask: int) -> int:
        if problem is Problem.EDGE_TURAN:
            return base_edges + popcount(mask)
        cliques = base_cliques + count_cliques_within(parent, k - 1, mask)
        if problem is Problem.GENERALIZED_TURAN:
            return cliques
        return base_edges + popcount(mask) + cliques

    def feasible(mask: int) -> bool:
        return find_embedding(forbidden, parent.add_vertex(mask), must_use=new) is None

    best_value = -1
    best: List[Graph] = []
    nodes = 0

    def leaf(chosen: int) -> None:
        nonlocal best_value, best
        child = parent.add_vertex(chosen)
        if problem is Problem.COLORED_TURAN:
            floor = incumbent.get()
            found = best_red_coloring(child, k, at_least=floor if floor >= 0 else None)
            if found is None:
                return
            value = found[0]
        else:
            value = optimistic(chosen)
        if value > best_value:
            best_value, best = value, [child]
        elif value == best_value:
            best.append(child)
        incumbent.offer(value)

    def dfs(v: int, chosen: int, skipped: int) -> None:
        nonlocal nodes
        nodes += 1
        rest = everything & ~((1 << v) - 1)
        if optimistic(chosen | rest) < incumbent.get():
            return
        if v == parent.n:
            # skipped only holds vertices that were addable when skipped
            if any(feasible(chosen | (1 << w)) for w in iter_bits(skipped)):
                return
            leaf(chosen)
            return
        with_v = chosen | (1 << v)
        if feasible(with_v):
            dfs(v + 1, with_v, skipped)
            dfs(v + 1, chosen, skipped | (1 << v))
        else:
            dfs(v + 1, chosen, skipped)

    dfs(0, 0, 0)
    if not best:
        return _Branch(-1, b"", None, nodes)
    forms = [(canonical_form(graph), graph) for graph in best]
    form, graph = min(forms, key=lambda pair: pair[0].certificate)
    witness: Witness = graph.relabel(form.label_permutation)
    if problem is Problem.COLORED_TURAN:
        _, red = best_red_coloring(witness, k)
        witness = BlueRedGraph(witness, red)
    return _Branch(best_value, form.certificate, witness, nodes)


def _graph_search(problem: Problem, n: int, k: Optional[int], forbidden: Graph, config: RunConfig) -> ExtremalResult:
    started = time.perf_counter()
    if n == 0:
        empty = Graph.empty(0)
        witness: Witness = BlueRedGraph.all_blue(empty) if problem is Problem.COLORED_TURAN else empty
        branches = [_Branch(0, canonical_form(empty).certificate, witness, 1)]
    else:
        parents = free_classes(forbidden, n - 1, config.workers, config.progress)
        branches = run_tasks(
            _best_extension,
            [(problem, k, forbidden, parent) for parent in parents],
            workers=config.workers,
            progress=config.progress,
            desc=f"{problem.value} n={n}",
        )
    value = max(branch.value for branch in branches)
    chosen = min((b for b in branches if b.value == value), key=lambda b: b.certificate)
    result = ExtremalResult(
        problem=problem,
        n=n,
        k=k,
        forbidden=canonical_graph(forbidden),
        value=value,
        witness=chosen.witness,
        witness_certificate=chosen.certificate.hex(),
        nodes_explored=sum(branch.nodes for branch in branches),
        wall_time=time.perf_counter() - started,
    )
    if problem is Problem.COLORED_TURAN:
        result.min_degree = min(vertex_g_contributions(chosen.witness, k), default=0)
    logger.info(
        "%s n=%d k=%s: value %d, %d nodes, %.2fs",
        problem.value, n, k, value, result.nodes_explored, result.wall_time,
    )
    validate_result(result)
    return result


def ex_edges(n: int, forbidden: Graph, config: Optional[RunConfig] = None) -> ExtremalResult:
    """
    Turán number ex(n, F)

    Args:
        n: Vertex count, at most the graph search cap
        forbidden: F, with at least one edge
        config: Caps, worker count and progress setting

    Returns:
        ExtremalResult whose witness is a canonical F-free graph
    """
    config = config or RunConfig()
    _require_edge(forbidden)
    _check_cap(n, config.caps.graph, "ex")
    return _graph_search(Problem.EDGE_TURAN, n, None, forbidden, config)


def ex_generalized(n: int, k: int, forbidden: Graph, config: Optional[RunConfig] = None) -> ExtremalResult:
    """Generalized Turán number ex(n, K_k, F), k >= 2"""
    config = config or RunConfig()
    if k < 2:
        raise InvalidParameterError(f"clique size must be >= 2, got k={k}")
    _require_edge(forbidden)
    _check_cap(n, config.caps.graph, "ex-gen")
    return _graph_search(Problem.GENERALIZED_TURAN, n, k, forbidden, config)


def ex_colored(n: int, k: int, forbidden: Graph, config: Optional[RunConfig] = None) -> ExtremalResult:
    """Colored Turán number ex^col(n, F) for the objective g with clique size k >= 3"""
    config = config or RunConfig()
    if k < 3:
        raise InvalidParameterError(f"the colored objective needs k >= 3, got k={k}")
    _require_edge(forbidden)
    _check_cap(n, config.caps.colored, "ex-col")
    return _graph_search(Problem.COLORED_TURAN, n, k, forbidden, config)


# Berge hypergraphs ------------------------------------------------------------


def _berge_branch(task: Tuple[int, int, Graph, Sequence[HyperEdge], int, Optional[int]]) -> _Branch:
    n, k, forbidden, subsets, second, upper_bound = task
    incumbent = current_incumbent()
    start = Hypergraph(n, k, (subsets[0], subsets[second]))
    if contains_berge(start, forbidden, through=subsets[second]) is not None:
        return _Branch(-1, b"", None, 1)
    total = len(subsets)
    best_size, best = 2, start
    incumbent.offer(2)
    nodes = 0

    def dfs(i: int, hypergraph: Hypergraph) -> None:
        nonlocal best_size, best, nodes
        nodes += 1
        size = hypergraph.edge_count()
        if size > best_size:
            best_size, best = size, hypergraph
            incumbent.offer(size)
        for t in range(i, total):
            bound = size + total - t
            if upper_bound is not None:
                bound = min(bound, upper_bound)
            if bound < incumbent.get() or bound <= best_size:
                return
            candidate = hypergraph.with_edge(subsets[t])
            if contains_berge(candidate, forbidden, through=subsets[t]) is None:
                dfs(t + 1, candidate)

    dfs(second + 1, start)
    return _Branch(best_size, b"", best, nodes)


def ex_berge(
    n: int,
    k: int,
    forbidden: Graph,
    config: Optional[RunConfig] = None,
    upper_bound: Optional[int] = None,
) -> ExtremalResult:
    """
    Berge-Turán number ex_k(n, Berge-F)

    Args:
        n: Vertex count, at most the configured cap for k
        k: Uniformity, 2 <= k <= 5
        forbidden: F, with at least one edge
        config: Caps and worker count
        upper_bound: Optional known upper bound on the optimum (for instance
            ex^col(n, F)); it only tightens pruning

    Returns:
        ExtremalResult whose witness is a Hypergraph
    """
    config = config or RunConfig()
    if k < 2:
        raise InvalidParameterError(f"uniformity must be >= 2, got k={k}")
    if k > MAX_BERGE_UNIFORMITY:
        raise CapExceededError(f"Berge searches are refused for uniformity k={k} > {MAX_BERGE_UNIFORMITY}")
    _require_edge(forbidden)
    _check_cap(n, config.caps.berge_cap(k), f"ex-berge k={k}")
    started = time.perf_counter()

    subsets = list(combinations(range(n), k))
    empty = Hypergraph(n, k, ())
    branches: List[_Branch] = []
    if subsets and contains_berge(Hypergraph(n, k, (subsets[0],)), forbidden) is None:
        branches = run_tasks(
            _berge_branch,
            [(n, k, forbidden, subsets, second, upper_bound) for second in range(1, len(subsets))],
            workers=config.workers,
            initial=1,
            progress=config.progress,
            desc=f"ex-berge n={n} k={k}",
        )
        branches.append(_Branch(1, b"", Hypergraph(n, k, (subsets[0],)), 1))
    branches.append(_Branch(0, b"", empty, 1))

    value = max(branch.value for branch in branches)
    chosen = next(branch for branch in branches if branch.value == value)
    witness = chosen.witness
    result = ExtremalResult(
        problem=Problem.BERGE_TURAN,
        n=n,
        k=k,
        forbidden=canonical_graph(forbidden),
        value=value,
        witness=witness,
        witness_certificate=format_hypergraph(witness),
        nodes_explored=sum(branch.nodes for branch in branches),
        wall_time=time.perf_counter() - started,
        min_degree=witness.min_degree(),
    )
    logger.info(
        "ex-berge n=%d k=%d: value %d, %d nodes, %.2fs", n, k, value, result.nodes_explored, result.wall_time
    )
    validate_result(result)
    return result


# Validation and the sandwich chain --------------------------------------------


def validate_result(result: ExtremalResult) -> None:
    """Re-check a witness from scratch; raises InvariantViolationError on any mismatch"""
    witness, forbidden, k = result.witness, result.forbidden, result.k
    if isinstance(witness, Hypergraph):
        ok = witness.n == result.n and contains_berge(witness, forbidden) is None
        recount = witness.edge_count()
    elif isinstance(witness, BlueRedGraph):
        ok = witness.graph.n == result.n and is_free(witness.graph, forbidden)
        recount = g_value(witness, k)
    else:
        ok = witness.n == result.n and is_free(witness, forbidden)
        recount = witness.edge_count() if result.problem is Problem.EDGE_TURAN else count_cliques(witness, k)
    if not ok:
        raise InvariantViolationError(f"{result.problem.value} n={result.n}: witness contains the forbidden graph")
    if recount != result.value:
        raise InvariantViolationError(
            f"{result.problem.value} n={result.n}: witness attains {recount}, reported {result.value}"
        )


def check_sandwich(
    generalized: Optional[int] = None,
    berge: Optional[int] = None,
    colored: Optional[int] = None,
    edges: Optional[int] = None,
) -> Dict[str, bool]:
    """
    Evaluate every link of the sandwich chain the given values allow

    Returns:
        Dict link name -> holds; raises InvariantViolationError if any link fails
    """
    upper = generalized + edges if generalized is not None and edges is not None else None
    links = {
        "generalized<=berge": (generalized, berge),
        "berge<=colored": (berge, colored),
        "colored<=generalized+edges": (colored, upper),
        "generalized<=colored": (generalized, colored),
        "berge<=generalized+edges": (berge, upper),
    }
    checks = {name: low <= high for name, (low, high) in links.items() if low is not None and high is not None}
    failed = [name for name, holds in checks.items() if not holds]
    if failed:
        raise InvariantViolationError(
            f"sandwich chain violated ({', '.join(failed)}): generalized={generalized}, berge={berge}, "
            f"colored={colored}, edges={edges}"
        )
    return checks


@dataclass
class SandwichReport:
    n: int
    k: int
    forbidden: Graph
    values: Dict[str, Optional[int]]
    checks: Dict[str, bool]
    refused: Dict[str, str] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return not self.refused

    @property
    def conjecture_equality(self) -> Optional[bool]:
        """Whether the Berge number equals the generalized Turán number at this n"""
        berge, generalized = self.values.get("berge"), self.values.get("generalized")
        if berge is None or generalized is None:
            return None
        return berge == generalized

    @property
    def slack(self) -> Dict[str, Optional[int]]:
        v = self.values

        def gap(high: Optional[int], low: Optional[int]) -> Optional[int]:
            return None if high is None or low is None else high - low

        upper = None if v["generalized"] is None or v["edges"] is None else v["generalized"] + v["edges"]
        return {
            "berge-generalized": gap(v["berge"], v["generalized"]),
            "colored-berge": gap(v["colored"], v["berge"]),
            "upper-colored": gap(upper, v["colored"]),
        }

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "forbidden": canonical_form(self.forbidden).hex(),
            **self.values,
            "checks": self.checks,
            "slack": self.slack,
            "conjecture_equality": self.conjecture_equality,
            "complete": self.complete,
            "refused": self.refused,
        }


Solver = Callable[..., ExtremalResult]


def solve(
    problem: Problem,
    n: int,
    k: Optional[int],
    forbidden: Graph,
    config: Optional[RunConfig] = None,
    upper_bound: Optional[int] = None,
) -> ExtremalResult:
    """Dispatch one problem by kind"""
    if problem is Problem.EDGE_TURAN:
        return ex_edges(n, forbidden, config)
    if problem is Problem.GENERALIZED_TURAN:
        return ex_generalized(n, k, forbidden, config)
    if problem is Problem.COLORED_TURAN:
        return ex_colored(n, k, forbidden, config)
    return ex_berge(n, k, forbidden, config, upper_bound=upper_bound)


def verify_sandwich(
    n: int,
    k: int,
    forbidden: Graph,
    config: Optional[RunConfig] = None,
    solver: Optional[Solver] = None,
) -> SandwichReport:
    """
    Compute ex(n, F), ex(n, K_k, F), ex^col(n, F), ex_k(n, Berge-F) and check the chain

    Problems refused by a cap are left out and named in the report; every
    link between the values that were computed is still checked.

    Args:
        n: Vertex count
        k: Uniformity / clique size, >= 3
        forbidden: F
        config: Caps and workers
        solver: Replacement for solve (the CLI passes its cached solver)

    Returns:
        SandwichReport
    """
    config = config or RunConfig()
    solver = solver or solve
    if k < 3:
        raise InvalidParameterError(f"the sandwich chain needs k >= 3, got k={k}")
    values: Dict[str, Optional[int]] = {"edges": None, "generalized": None, "colored": None, "berge": None}
    refused: Dict[str, str] = {}
    plan = [
        ("edges", Problem.EDGE_TURAN, None),
        ("generalized", Problem.GENERALIZED_TURAN, k),
        ("colored", Problem.COLORED_TURAN, k),
        ("berge", Problem.BERGE_TURAN, k),
    ]
    for name, problem, size in plan:
        extra = {"upper_bound": values["colored"]} if problem is Problem.BERGE_TURAN else {}
        try:
            values[name] = solver(problem, n, size, forbidden, config, **extra).value
        except CapExceededError as exc:
            refused[name] = str(exc)
            logger.info("sandwich n=%d k=%d: %s refused (%s)", n, k, name, exc)
    checks = check_sandwich(values["generalized"], values["berge"], values["colored"], values["edges"])
    return SandwichReport(n, k, canonical_graph(forbidden), values, checks, refused)
