"""Sparse vertex-indexed vectors with a zero default and atomic accumulation.

Storage is proportional to the number of touched keys, never to the number of
vertices in the graph; this is what keeps the diffusion algorithms' running
time local. Reads never create entries.
"""

from __future__ import annotations

import threading
from typing import Iterable, Iterator


class SparseVec:
    """Map from vertex id to real mass; absent keys read as 0.0.

    ``accumulate`` is linearizable under concurrent callers (a single lock;
    Python threads make finer striping pointless). ``entries`` and ``clear``
    require exclusive access. ``created`` counts distinct keys ever inserted,
    which the locality tests use as the work counter.
    """

    __slots__ = ("_data", "_lock", "created")

    def __init__(self, initial: Iterable[tuple[int, float]] | None = None):
        self._data: dict[int, float] = {}
        self._lock = threading.Lock()
        self.created = 0
        if initial is not None:
            for k, v in initial:
                self.assign(k, v)

    def read(self, key: int) -> float:
        return self._data.get(key, 0.0)

    def accumulate(self, key: int, delta: float) -> None:
        with self._lock:
            if key not in self._data:
                self.created += 1
                self._data[key] = delta
            else:
                self._data[key] += delta

    def assign(self, key: int, value: float) -> None:
        with self._lock:
            if key not in self._data:
                self.created += 1
            self._data[key] = value

    def entries(self) -> Iterator[tuple[int, float]]:
        return iter(self._data.items())

    def keys(self) -> Iterator[int]:
        return iter(self._data.keys())

    def total(self) -> float:
        return sum(self._data.values())

    def copy(self) -> "SparseVec":
        out = SparseVec()
        out._data = dict(self._data)
        out.created = len(out._data)
        return out

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: int) -> bool:
        return key in self._data

    def __repr__(self) -> str:
        return f"SparseVec({len(self._data)} entries)"
