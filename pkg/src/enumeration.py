"""
Isomorphism classes of F-free graphs by vertex extension

Level m holds one canonical representative per isomorphism class of F-free
graphs on m vertices. Level m + 1 is built by giving each representative a
new vertex with every possible neighbourhood and keeping a child only when

- it is still F-free (only copies through the new vertex need checking), and
- deleting the vertex the canonical labelling puts last yields the parent's
  class again (canonical deletion),

then de-duplicating the surviving children of each parent by certificate.
Every class is produced by exactly one parent class, so no global
de-duplication is needed and parents can be handed to separate workers.

Levels are memoized per (F, m) for the life of the process.
"""
import logging
from typing import Dict, List, Tuple

from src.canonical import canonical_form
from src.graph_core import Graph
from src.parallel import run_tasks
from src.subgraph import find_embedding

logger = logging.getLogger(__name__)

Level = List[Tuple[bytes, Graph]]

_levels: Dict[Tuple[Graph, int], Level] = {}


def _augment(task: Tuple[Graph, Graph]) -> Level:
    parent, forbidden = task
    parent_certificate = canonical_form(parent).certificate
    new = parent.n
    children: Dict[bytes, Graph] = {}
    for mask in range(1 << parent.n):
        child = parent.add_vertex(mask)
        if find_embedding(forbidden, child, must_use=new) is not None:
            continue
        form = canonical_form(child)
        last = form.label_permutation.index(child.n - 1)
        if last != new and canonical_form(child.without_vertex(last)).certificate != parent_certificate:
            continue
        if form.certificate not in children:
            children[form.certificate] = child.relabel(form.label_permutation)
    return sorted(children.items(), key=lambda pair: pair[0])


def free_class_levels(forbidden: Graph, n: int, workers: int = 1, progress: bool = False) -> Level:
    """
    Canonical representatives of all F-free graphs on n vertices

    Args:
        forbidden: Graph F with at least one edge
        n: Vertex count
        workers: Processes used to extend each level
        progress: Show a progress bar per level

    Returns:
        (certificate, representative) pairs sorted by certificate
    """
    if (forbidden, n) in _levels:
        return _levels[(forbidden, n)]
    if n == 0:
        level: Level = [(canonical_form(Graph.empty(0)).certificate, Graph.empty(0))]
    else:
        parents = free_class_levels(forbidden, n - 1, workers, progress)
        batches = run_tasks(
            _augment,
            [(graph, forbidden) for _, graph in parents],
            workers=workers,
            progress=progress,
            desc=f"classes n={n}",
        )
        level = sorted((pair for batch in batches for pair in batch), key=lambda pair: pair[0])
        logger.info("Level %d: %d F-free classes from %d parents", n, len(level), len(parents))
    _levels[(forbidden, n)] = level
    return level


def free_classes(forbidden: Graph, n: int, workers: int = 1, progress: bool = False) -> List[Graph]:
    """Canonical representatives only, in certificate order"""
    return [graph for _, graph in free_class_levels(forbidden, n, workers, progress)]


def clear_level_cache() -> None:
    _levels.clear()
