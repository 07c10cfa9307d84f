"""Search limits shared by the enumeration code, and the worker-pool helper."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**9
DEFAULT_CYCLE_CAP = 200_000

T = TypeVar("T")


@dataclass(frozen=True)
class Budget:
    """Limits for one enumeration or search. ``max_seconds=None`` means unlimited."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float | None = None
    cycle_cap: int = DEFAULT_CYCLE_CAP

    @classmethod
    def from_settings(cls, **overrides: Any) -> Budget:
        from django.conf import settings

        values = {
            "max_nodes": settings.PRCF_MAX_NODES,
            "max_seconds": settings.PRCF_MAX_SECONDS,
            "cycle_cap": settings.PRCF_CYCLE_CAP,
        }
        values.update({key: val for key, val in overrides.items() if val is not None})
        return cls(**values)

    def deadline(self) -> float | None:
        """Absolute wall-clock deadline (``time.time()`` based, valid across processes)."""
        if self.max_seconds is None:
            return None
        return time.time() + self.max_seconds

    def as_dict(self) -> dict[str, Any]:
        return {
            "max_nodes": self.max_nodes,
            "max_seconds": self.max_seconds,
            "cycle_cap": self.cycle_cap,
        }


class Meter:
    """Counts search-tree nodes against a cap and an optional deadline."""

    __slots__ = ("limit", "deadline", "nodes", "exceeded", "reason")

    def __init__(self, limit: int, deadline: float | None = None):
        self.limit = limit
        self.deadline = deadline
        self.nodes = 0
        self.exceeded = False
        self.reason = ""

    def charge(self, count: int = 1) -> bool:
        """Add ``count`` nodes; returns False once the budget is exhausted."""
        self.nodes += count
        if self.nodes > self.limit:
            self.exceeded = True
            self.reason = f"node budget of {self.limit} exceeded"
            return False
        if self.deadline is not None and (self.nodes & 0x3FF) < count:
            if time.time() > self.deadline:
                self.exceeded = True
                self.reason = "time budget exceeded"
                return False
        return True


def partition(items: Sequence[T], workers: int) -> list[list[T]]:
    """Round-robin split so expensive low-index roots spread across chunks."""
    workers = max(1, min(workers, len(items))) if items else 1
    return [list(items[i::workers]) for i in range(workers)]


def run_chunks(
    func: Callable[..., T], chunks: Sequence[Any], workers: int, *args: Any
) -> list[T]:
    """
    Apply ``func(chunk, *args)`` to every chunk, in-process when ``workers == 1``.

    Results come back in chunk order whatever the worker count.
    """
    if workers <= 1 or len(chunks) <= 1:
        return [func(chunk, *args) for chunk in chunks]
    logger.debug("run_chunks: %s over %d chunks, %d workers", func.__name__, len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, chunk, *args) for chunk in chunks]
        return [future.result() for future in futures]
