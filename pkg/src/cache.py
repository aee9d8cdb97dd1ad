"""
Persistent result cache

One JSON object per line, keyed by (problem, n, k, canonical certificate of F).
Reruns consult the cache before searching; `verify` mode recomputes on every
hit and fails loudly when the stored value or witness disagrees. Whenever two
or more of the four sandwich quantities are known for the same (n, k, F) the
chain between them is re-checked.

Usage:
    solver = CachedSolver(RunConfig.from_env())
    result = solver(Problem.GENERALIZED_TURAN, 6, 3, complete_graph(4))
"""
import json
import logging
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from src import __version__
from src.blue_red import BlueRedGraph
from src.canonical import canonical_form, canonical_graph
from src.config import RunConfig
from src.errors import InvalidInputError, InvariantViolationError
from src.extremal import ExtremalResult, Problem, check_sandwich, solve, validate_result
from src.graph_core import Graph
from src.graph_io import graph_from_json, graph_to_json, hypergraph_from_json, hypergraph_to_json
from src.hypergraph import Hypergraph

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, int, Optional[int], str]


@dataclass
class CacheEntry:
    problem: str
    n: int
    k: Optional[int]
    forbidden: str
    value: int
    witness: Dict[str, Any]
    witness_certificate: str
    min_degree: Optional[int]
    version: str
    timestamp: str

    @property
    def key(self) -> CacheKey:
        return (self.problem, self.n, self.k, self.forbidden)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CacheEntry":
        try:
            return cls(**json.loads(line))
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed cache line: {exc}") from exc


def serialize_witness(witness: Union[Graph, BlueRedGraph, Hypergraph]) -> Dict[str, Any]:
    if isinstance(witness, Hypergraph):
        return {"type": "hypergraph", **hypergraph_to_json(witness)}
    if isinstance(witness, BlueRedGraph):
        return {
            "type": "blue-red",
            "graph": graph_to_json(witness.graph),
            "red_edges": [list(edge) for edge in witness.sorted_red_edges()],
        }
    return {"type": "graph", "graph": graph_to_json(witness)}


def deserialize_witness(data: Dict[str, Any]) -> Union[Graph, BlueRedGraph, Hypergraph]:
    kind = data.get("type")
    if kind == "hypergraph":
        return hypergraph_from_json(data)
    if kind == "blue-red":
        return BlueRedGraph.with_red(graph_from_json(data["graph"]), data["red_edges"])
    if kind == "graph":
        return graph_from_json(data["graph"])
    raise InvalidInputError(f"unknown witness type {kind!r} in cache")


def make_key(problem: Problem, n: int, k: Optional[int], forbidden: Graph) -> CacheKey:
    return (problem.value, n, k, canonical_form(forbidden).hex())


def entry_from_result(result: ExtremalResult) -> CacheEntry:
    return CacheEntry(
        problem=result.problem.value,
        n=result.n,
        k=result.k,
        forbidden=result.forbidden_certificate,
        value=result.value,
        witness=serialize_witness(result.witness),
        witness_certificate=result.witness_certificate,
        min_degree=result.min_degree,
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def result_from_entry(entry: CacheEntry, forbidden: Graph) -> ExtremalResult:
    return ExtremalResult(
        problem=Problem(entry.problem),
        n=entry.n,
        k=entry.k,
        forbidden=canonical_graph(forbidden),
        value=entry.value,
        witness=deserialize_witness(entry.witness),
        witness_certificate=entry.witness_certificate,
        min_degree=entry.min_degree,
        from_cache=True,
    )


class ResultCache:
    """JSON-lines store; all writes go through one lock"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self._entries: Optional[Dict[CacheKey, CacheEntry]] = None
        self._lock = threading.Lock()

    def _load(self) -> Dict[CacheKey, CacheEntry]:
        if self._entries is None:
            entries: Dict[CacheKey, CacheEntry] = {}
            if self.path.exists():
                for number, line in enumerate(self.path.read_text().splitlines(), start=1):
                    if not line.strip():
                        continue
                    try:
                        entry = CacheEntry.from_json(line)
                    except InvalidInputError as exc:
                        logger.warning("Skipping cache line %d of %s: %s", number, self.path, exc)
                        continue
                    entries[entry.key] = entry
            self._entries = entries
        return self._entries

    def get(self, key: CacheKey) -> Optional[CacheEntry]:
        return self._load().get(key)

    def put(self, entry: CacheEntry) -> None:
        with self._lock:
            self._load()[entry.key] = entry
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as handle:
                handle.write(entry.to_json() + "\n")

    def __len__(self) -> int:
        return len(self._load())


class CachedSolver:
    """Drop-in replacement for extremal.solve that reads and writes the cache"""

    def __init__(self, config: RunConfig, cache: Optional[ResultCache] = None):
        self.config = config
        self.cache = cache or ResultCache(config.cache_path)

    def __call__(
        self,
        problem: Problem,
        n: int,
        k: Optional[int],
        forbidden: Graph,
        config: Optional[RunConfig] = None,
        upper_bound: Optional[int] = None,
    ) -> ExtremalResult:
        config = config or self.config
        if not config.use_cache:
            return solve(problem, n, k, forbidden, config, upper_bound=upper_bound)
        key = make_key(problem, n, k, forbidden)
        entry = self.cache.get(key)
        if entry is not None:
            logger.debug("Cache hit %s", key)
            result = result_from_entry(entry, forbidden)
            validate_result(result)
            if config.verify_cache:
                fresh = solve(problem, n, k, forbidden, config, upper_bound=upper_bound)
                if (fresh.value, fresh.witness_certificate) != (result.value, result.witness_certificate):
                    raise InvariantViolationError(
                        f"cache entry {key} holds value {result.value}, recomputation gives {fresh.value}"
                    )
        else:
            logger.debug("Cache miss %s", key)
            result = solve(problem, n, k, forbidden, config, upper_bound=upper_bound)
            self.cache.put(entry_from_result(result))
        self.check_siblings(n, k, forbidden)
        return result

    def check_siblings(self, n: int, k: Optional[int], forbidden: Graph) -> Dict[str, bool]:
        """Re-check the sandwich chain among the cached quantities for (n, k, F)"""
        if k is None:
            return {}
        certificate = canonical_form(forbidden).hex()

        def cached(problem: Problem, size: Optional[int]) -> Optional[int]:
            entry = self.cache.get((problem.value, n, size, certificate))
            return entry.value if entry is not None else None

        return check_sandwich(
            generalized=cached(Problem.GENERALIZED_TURAN, k),
            berge=cached(Problem.BERGE_TURAN, k),
            colored=cached(Problem.COLORED_TURAN, k),
            edges=cached(Problem.EDGE_TURAN, None),
        )
