"""Immutable CSR storage for undirected graphs plus set-quality measures.

Graphs are unweighted, loop-free, deduplicated and symmetric. Vertex ids are
dense integers 0..n-1. All arrays are int64 so billion-edge graphs round-trip
through the binary format without truncation.
"""

from __future__ import annotations

import struct
from typing import IO, Iterable, Iterator

import numpy as np

MAGIC = b"LGC1"
_HEADER = struct.Struct("<4sQQQ")  # magic, n, m, reserved


class EdgeListParseError(ValueError):
    """Raised when a text edge list contains a malformed line."""

    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        super().__init__(f"malformed edge list line {line_number}: {line.strip()!r}")


class GraphFormatError(ValueError):
    """Raised when a binary graph file violates the format or a CSR invariant."""


class Graph:
    """Compressed sparse row adjacency of an undirected graph.

    ``offsets`` has length n+1 with ``offsets[v]:offsets[v+1]`` delimiting the
    sorted neighbor list of v; ``neighbors`` has length 2m (every undirected
    edge appears in both directions).
    """

    __slots__ = ("offsets", "neighbors")

    def __init__(self, offsets: np.ndarray, neighbors: np.ndarray):
        self.offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        self.neighbors = np.ascontiguousarray(neighbors, dtype=np.int64)

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        return len(self.neighbors) // 2

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        """Yield every directed pair (u, v), i.e. each undirected edge twice."""
        for u in range(self.n):
            for v in self.neighbors_of(u):
                yield u, int(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.offsets, other.offsets) and np.array_equal(
            self.neighbors, other.neighbors
        )

    def __hash__(self) -> int:  # immutable by convention
        return hash((self.offsets.tobytes(), self.neighbors.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(source: Iterable[str] | IO[str]) -> list[tuple[int, int]]:
    """Parse a SNAP-style edge list: '#' comment lines, 'u v' data lines.

    Returns pairs in file order; self-loops and duplicates pass through
    untouched (build_graph removes them).
    """
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, line)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(lineno, line) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, line)
        pairs.append((u, v))
    return pairs


def build_graph(
    edges: Iterable[tuple[int, int]],
    symmetrize: bool = True,
    num_vertices: int | None = None,
) -> Graph:
    """Normalize edge pairs into a CSR graph.

    Removes self-loops and duplicates and sorts adjacency lists ascending.
    With ``symmetrize`` the reverse of every pair is added first; without it
    the input must already contain both directions of every edge.
    n defaults to 1 + the largest id seen; ``num_vertices`` overrides it to
    allow trailing isolated vertices.
    """
    arr = np.asarray(list(edges), dtype=np.int64)
    if arr.size == 0:
        n = num_vertices or 0
        return Graph(np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
    if symmetrize:
        arr = np.concatenate([arr, arr[:, ::-1]])
    arr = arr[arr[:, 0] != arr[:, 1]]  # drop self-loops
    n = int(arr.max()) + 1 if arr.size else 0
    if num_vertices is not None:
        if num_vertices < n:
            raise ValueError(f"num_vertices={num_vertices} smaller than max id + 1 = {n}")
        n = num_vertices
    if arr.size == 0:
        return Graph(np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int64))
    keys = arr[:, 0] * n + arr[:, 1]
    keys = np.unique(keys)
    src, dst = keys // n, keys % n
    if not symmetrize:
        rev = np.isin(dst * n + src, keys, assume_unique=False)
        if not rev.all():
            u, v = int(src[~rev][0]), int(dst[~rev][0])
            raise ValueError(f"edge ({u},{v}) present without its reverse ({v},{u})")
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return Graph(offsets, dst)


def volume(g: Graph, members: Iterable[int]) -> int:
    """Sum of degrees over the set."""
    return int(sum(g.degree(int(v)) for v in set(members)))


def boundary(g: Graph, members: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in the set."""
    s = set(int(v) for v in members)
    return sum(1 for v in s for w in g.neighbors_of(v) if int(w) not in s)


def conductance(g: Graph, members: Iterable[int]) -> float:
    """Boundary edge count over min(vol(S), 2m - vol(S)); 1.0 on zero denominator.

    The zero-denominator rule (S = V, or S made of isolated vertices) gives
    the worst score so a sweep never selects a degenerate cut.
    """
    s = set(int(v) for v in members)
    if not s:
        raise ValueError("conductance of empty set is undefined")
    for v in s:
        if v < 0 or v >= g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
    vol = volume(g, s)
    denom = min(vol, 2 * g.m - vol)
    if denom == 0:
        return 1.0
    return boundary(g, s) / denom


def write_binary(g: Graph, sink: IO[bytes]) -> None:
    """Serialize to the little-endian binary format (magic 'LGC1')."""
    sink.write(_HEADER.pack(MAGIC, g.n, g.m, 0))
    if g.n > 0:
        sink.write(g.offsets.astype("<i8").tobytes())
        sink.write(g.neighbors.astype("<i8").tobytes())


def read_binary(source: IO[bytes]) -> Graph:
    """Read a binary graph, validating format and CSR invariants."""
    header = source.read(_HEADER.size)
    if len(header) < _HEADER.size:
        raise GraphFormatError("truncated file: incomplete header")
    magic, n, m, _reserved = _HEADER.unpack(header)
    if magic != MAGIC:
        raise GraphFormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if n == 0:
        if m != 0:
            raise GraphFormatError("n=0 but m nonzero")
        return Graph(np.zeros(1, dtype=np.int64), np.empty(0, dtype=np.int64))
    raw = source.read(8 * (n + 1))
    if len(raw) < 8 * (n + 1):
        raise GraphFormatError("truncated file: incomplete offsets array")
    offsets = np.frombuffer(raw, dtype="<i8").astype(np.int64)
    raw = source.read(8 * 2 * m)
    if len(raw) < 8 * 2 * m:
        raise GraphFormatError("truncated file: incomplete neighbors array")
    neighbors = np.frombuffer(raw, dtype="<i8").astype(np.int64)
    _validate_csr(n, m, offsets, neighbors)
    return Graph(offsets, neighbors)


def _validate_csr(n: int, m: int, offsets: np.ndarray, neighbors: np.ndarray) -> None:
    """Check CSR invariants, naming the first violation found."""
    if offsets[0] != 0:
        raise GraphFormatError("offsets[0] != 0")
    if (np.diff(offsets) < 0).any():
        raise GraphFormatError("offsets not non-decreasing")
    if offsets[n] != 2 * m:
        raise GraphFormatError(f"offsets[n]={int(offsets[n])} != 2m={2 * m}")
    if len(neighbors) and (neighbors.min() < 0 or neighbors.max() >= n):
        raise GraphFormatError("neighbor id out of range")
    for v in range(n):
        adj = neighbors[offsets[v] : offsets[v + 1]]
        if (adj == v).any():
            raise GraphFormatError(f"self-loop at vertex {v}")
        if len(adj) > 1 and (np.diff(adj) <= 0).any():
            raise GraphFormatError(f"adjacency of vertex {v} not sorted strictly ascending")
    # symmetry: the multiset of (u,v) must equal the multiset of (v,u)
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(offsets))
    fwd = np.sort(src * n + neighbors)
    rev = np.sort(neighbors * n + src)
    if not np.array_equal(fwd, rev):
        raise GraphFormatError("adjacency not symmetric")
