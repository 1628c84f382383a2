"""
Fork-join worker pool used by the engine phases.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from src.errors import ConfigError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Ants per construction task. Chunks are fixed, so the assignment of ants to
# tasks is the same for every worker count.
ANT_CHUNK = 8


def fixed_chunks(count: int, size: int) -> List[range]:
    """Split range(count) into consecutive ranges of at most size items."""
    return [range(start, min(start + size, count)) for start in range(0, count, size)]


class ForkJoinPool:
    """
    Thread pool with a fork-join interface: fork() submits every task, waits
    for all of them and returns their results in submission order.

    With workers == 1 tasks run inline on the calling thread.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ConfigError(f"workers must be >= 1, got {workers}")
        self.workers = workers
        self._executor: Optional[ThreadPoolExecutor] = None
        if workers > 1:
            self._executor = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="ant-worker")
            logger.debug("Started pool with %d workers", workers)

    @property
    def executor(self) -> Optional[ThreadPoolExecutor]:
        return self._executor

    def fork(self, fn: Callable[[T], R], tasks: Sequence[T]) -> List[R]:
        if self._executor is None:
            return [fn(task) for task in tasks]
        futures = [self._executor.submit(fn, task) for task in tasks]
        # join: result() re-raises the first failure in task order
        return [future.result() for future in futures]

    def shutdown(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "ForkJoinPool":
        return self

    def __exit__(self, *exc) -> None:
        self.shutdown()
