from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional


def default_threads() -> int:
    return os.cpu_count() or 1


def pmap(fn: Callable, items: Iterable, threads: Optional[int] = 1) -> list:
    """Order-preserving map, fanned out to worker processes when threads > 1."""
    items = list(items)
    if threads is None:
        threads = default_threads()
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))
