"""
Worker pool with a shared incumbent

Searches split their tree into independent tasks (one per parent class or
per second hyperedge). Every task reads the best value found so far by any
worker and offers its own improvements; the incumbent only ever grows, so a
stale read can only make pruning weaker, never wrong.

Results come back in task order whatever the worker count, which keeps the
final tie-breaking identical between serial and parallel runs.

Usage:
    results = run_tasks(search_branch, tasks, workers=4, initial=1)
    # inside search_branch:
    incumbent = current_incumbent()
    if bound < incumbent.get(): ...
"""
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class LocalIncumbent:
    """Incumbent for single-process runs"""

    def __init__(self, value: int = -1):
        self._value = value

    def get(self) -> int:
        return self._value

    def offer(self, value: int) -> None:
        if value > self._value:
            self._value = value


class SharedIncumbent:
    """Monotone maximum shared between processes through a lock-protected integer"""

    def __init__(self, value: int = -1, shared: Optional[Any] = None):
        self._shared = shared if shared is not None else multiprocessing.Value("q", value)

    def get(self) -> int:
        return self._shared.value

    def offer(self, value: int) -> None:
        if value <= self._shared.value:
            return
        with self._shared.get_lock():
            if value > self._shared.value:
                self._shared.value = value


_incumbent: Any = LocalIncumbent()


def current_incumbent() -> Any:
    """Incumbent of the run this task belongs to"""
    return _incumbent


def _init_worker(shared: Any) -> None:
    global _incumbent
    _incumbent = SharedIncumbent(shared=shared)


def run_tasks(
    fn: Callable[[T], R],
    tasks: Sequence[T],
    workers: int = 1,
    initial: int = -1,
    progress: bool = False,
    desc: Optional[str] = None,
) -> List[R]:
    """
    Run fn over tasks, serially or on a process pool

    Args:
        fn: Module-level function (must be picklable for workers > 1)
        tasks: Task arguments
        workers: Process count; 1 runs in this process
        initial: Starting incumbent value
        progress: Show a tqdm progress bar
        desc: Progress bar label

    Returns:
        Results in task order
    """
    global _incumbent
    if workers <= 1 or len(tasks) <= 1:
        previous = _incumbent
        _incumbent = LocalIncumbent(initial)
        try:
            return [fn(task) for task in tqdm(tasks, desc=desc, disable=not progress)]
        finally:
            _incumbent = previous

    shared = multiprocessing.Value("q", initial)
    chunksize = max(1, len(tasks) // (workers * 8))
    logger.info("Dispatching %d tasks to %d workers (chunksize %d)", len(tasks), workers, chunksize)
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(shared,)) as pool:
        return list(
            tqdm(pool.map(fn, tasks, chunksize=chunksize), total=len(tasks), desc=desc, disable=not progress)
        )
