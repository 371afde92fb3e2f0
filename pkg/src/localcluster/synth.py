"""Synthetic graph generators for benchmarks and tests."""

from __future__ import annotations

import numpy as np

from .graph import Graph, build_graph


def rand_local_graph(n: int, edges_per_vertex: int = 5, rng_seed: int = 0) -> Graph:
    """Random graph with locality bias: each vertex draws edges to neighbors
    whose id offset is sampled log-uniformly, so most edges are short-range.
    """
    rng = np.random.default_rng(rng_seed)
    src = np.repeat(np.arange(n, dtype=np.int64), edges_per_vertex)
    k = len(src)
    offsets = np.exp(rng.uniform(0, np.log(max(n - 1, 2)), size=k)).astype(np.int64)
    offsets = np.maximum(offsets, 1) * rng.choice([-1, 1], size=k)
    dst = (src + offsets) % n
    return build_graph(np.stack([src, dst], axis=1), num_vertices=n)


def random_graph(n: int, avg_degree: float = 4.0, rng_seed: int = 0) -> Graph:
    """Erdos-Renyi-style graph via sampled endpoint pairs."""
    rng = np.random.default_rng(rng_seed)
    k = max(1, int(n * avg_degree / 2))
    src = rng.integers(0, n, size=k)
    dst = rng.integers(0, n, size=k)
    return build_graph(np.stack([src, dst], axis=1), num_vertices=n)


def random_community_graph(
    num_communities: int = 5,
    community_size: int = 40,
    intra_degree: float = 8.0,
    inter_degree: float = 1.0,
    rng_seed: int = 0,
) -> Graph:
    """Planted-partition graph: dense inside communities, sparse across."""
    rng = np.random.default_rng(rng_seed)
    n = num_communities * community_size
    pairs = []
    for c in range(num_communities):
        lo = c * community_size
        k = int(community_size * intra_degree / 2)
        pairs.append(rng.integers(lo, lo + community_size, size=(k, 2)))
    k_inter = int(n * inter_degree / 2)
    pairs.append(rng.integers(0, n, size=(k_inter, 2)))
    return build_graph(np.concatenate(pairs), num_vertices=n)
