"""Worker pool helper for parameter scans."""

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from goldbach3.app.config import settings

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def resolve_threads(threads: int | None = None) -> int:
    """Return the pool size: explicit value, then settings, then CPU count."""
    if threads is None:
        threads = settings.threads
    if threads is None:
        threads = os.cpu_count() or 1
    return max(1, threads)


def map_ordered(
    fn: Callable[[T], R], items: Iterable[T], threads: int | None = None
) -> list[R]:
    """
    Apply ``fn`` to every item, possibly in parallel.

    Args:
        fn: Pure function of one work item
        items: Work items (e.g. modulus cells)
        threads: Pool size; 1 runs inline

    Returns:
        Results in the order of ``items``, independent of completion order
    """
    work = list(items)
    pool_size = min(resolve_threads(threads), max(1, len(work)))
    if pool_size == 1:
        return [fn(item) for item in work]

    logger.debug("Dispatching %d work items to %d threads", len(work), pool_size)
    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        return list(pool.map(fn, work))
