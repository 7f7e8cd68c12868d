"""
Thread pool used to fan out independent evaluations.
"""

import concurrent.futures
from typing import Callable, Iterable, TypeVar

from config import settings

T = TypeVar("T")
R = TypeVar("R")

__all__ = ("get_custom_executor", "map_ordered")

# Custom thread pool executor
_custom_executor = None
_custom_workers = None


def get_custom_executor(max_workers: int | None = None):
    """Get custom thread pool executor."""
    global _custom_executor, _custom_workers
    workers = max(1, max_workers or settings.WORKERS)
    if _custom_executor is None or _custom_workers != workers:
        if _custom_executor is not None:
            _custom_executor.shutdown(wait=True)
        _custom_executor = concurrent.futures.ThreadPoolExecutor(
            max_workers=workers, thread_name_prefix="hyperzeta_worker"
        )
        _custom_workers = workers
    return _custom_executor


def map_ordered(
    func: Callable[[T], R], items: Iterable[T], max_workers: int | None = None
) -> list[R]:
    """Apply func to every item on the pool; results keep the input order."""
    items = list(items)
    if max_workers == 1 or len(items) <= 1:
        return [func(item) for item in items]
    return list(get_custom_executor(max_workers).map(func, items))
