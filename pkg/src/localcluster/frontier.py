"""Data-parallel primitives scoped to the active vertex subset.

vertex_map and edge_map do work proportional to the frontier and its incident
edges only, which is what makes the diffusion loops local. Callbacks may run
concurrently; both primitives act as a barrier (all callbacks finish before
they return). Shared mutation inside callbacks must go through
SparseVec.accumulate or an equivalently atomic operation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence

from .graph import Graph


class Frontier:
    """An immutable set of distinct active vertex ids."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        self.vertices = tuple(dict.fromkeys(int(v) for v in vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __repr__(self) -> str:
        return f"Frontier(size={len(self.vertices)})"


def _run_chunks(items: Sequence, worker: Callable[[Sequence], None], threads: int) -> None:
    if threads <= 1 or len(items) < 2:
        worker(items)
        return
    chunk = (len(items) + threads - 1) // threads
    parts = [items[i : i + chunk] for i in range(0, len(items), chunk)]
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        for fut in [pool.submit(worker, part) for part in parts]:
            fut.result()  # barrier; re-raise callback errors


def vertex_map(frontier: Frontier, fn: Callable[[int], None], threads: int = 1) -> None:
    """Apply fn exactly once to each frontier vertex, possibly concurrently."""

    def worker(part: Sequence[int]) -> None:
        for v in part:
            fn(v)

    _run_chunks(frontier.vertices, worker, threads)


def edge_map(
    g: Graph,
    frontier: Frontier,
    fn: Callable[[int, int], None],
    threads: int = 1,
) -> list[int]:
    """Apply fn to every (src, dst) with src in the frontier.

    Returns the destination ids touched, with duplicates (a vertex reachable
    from several sources appears once per incident edge); the caller feeds
    them to frontier_filter as next-frontier candidates. The length of the
    returned list is exactly the sum of frontier degrees, which doubles as
    the edge-work counter.
    """
    results: list[list[int]] = []

    def worker(part: Sequence[int]) -> None:
        touched: list[int] = []
        for s in part:
            for d in g.neighbors_of(s):
                d = int(d)
                fn(s, d)
                touched.append(d)
        results.append(touched)

    _run_chunks(frontier.vertices, worker, threads)
    if len(results) == 1:
        return results[0]
    return [d for part in results for d in part]


def frontier_filter(candidates: Iterable[int], pred: Callable[[int], bool]) -> Frontier:
    """Dedup candidates and keep those satisfying pred; work is O(|candidates|)."""
    return Frontier(v for v in dict.fromkeys(int(c) for c in candidates) if pred(v))
