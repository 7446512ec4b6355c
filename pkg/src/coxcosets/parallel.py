"""Fork-based fan-out for verification sweeps with deterministic merging."""

from __future__ import annotations

import multiprocessing as mp
import os

_STATE: dict = {}


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def _call(chunk):
    fn, g = _STATE["fn"], _STATE["group"]
    return [fn(g, item) for item in chunk]


def map_items(fn, g, items, jobs: int | None = None) -> list:
    """``[fn(g, item) for item in items]``, split over forked workers when ``jobs > 1``.

    The group is inherited through fork rather than pickled.  Results keep
    the input order.
    """
    items = list(items)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(items) < 2 or "fork" not in mp.get_all_start_methods():
        return [fn(g, item) for item in items]
    _STATE.update(fn=fn, group=g)
    size = -(-len(items) // (jobs * 4))
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    try:
        with mp.get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_call, chunks)
    finally:
        _STATE.clear()
    return [r for part in parts for r in part]
