import math
import random

import numpy as np
import pytest

from localcluster.graph import Graph, build_graph
from localcluster.sparsevec import SparseVec


@pytest.fixture
def k3() -> Graph:
    return build_graph([(0, 1), (1, 2), (0, 2)])


# Worked-example fixture: vertices 0..3 are the ordered quartet with degrees
# [2,2,3,4]; internal edges 0-1, 0-2, 1-2, 2-3; three external edges at 3.
# The remaining vertex 7 and edge 4-7 are free filler to reach n=8, m=8.
FIG_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6), (4, 7)]


@pytest.fixture
def fig_graph() -> Graph:
    return build_graph(FIG_EDGES)


@pytest.fixture
def fig_mass() -> SparseVec:
    # p/d ratios 0.50, 0.40, 0.30, 0.20 force the order [0, 1, 2, 3]
    return SparseVec([(0, 1.0), (1, 0.8), (2, 0.9), (3, 0.8)])


def random_graph(rng: random.Random, n: int, avg_degree: float = 4.0) -> Graph:
    k = max(1, int(n * avg_degree / 2))
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(k)]
    return build_graph(pairs, num_vertices=n)


def conductance_oracle(g: Graph, members) -> float:
    """Brute-force edge scan over the full graph."""
    s = set(int(v) for v in members)
    crossing = 0
    vol = 0
    for u in range(g.n):
        for w in g.neighbors_of(u):
            if u in s:
                vol += 1
                if int(w) not in s:
                    crossing += 1
    denom = min(vol, 2 * g.m - vol)
    return 1.0 if denom == 0 else crossing / denom


def dense_heat_kernel_oracle(g: Graph, seed: int, t: float, degree: int) -> np.ndarray:
    """Untruncated closed form of the deterministic series diffusion:
    sum_{k=0}^{N-1} (t^k/k!) P^k e_s  +  (t^{N-1}/(N-1)!) P^N e_s,
    with P = A D^{-1}."""
    n = g.n
    a = np.zeros((n, n))
    for u in range(n):
        for w in g.neighbors_of(u):
            a[int(w), u] = 1.0
    d = g.degrees.astype(float)
    p_mat = a / np.where(d > 0, d, 1.0)[None, :]
    vec = np.zeros(n)
    vec[seed] = 1.0
    out = np.zeros(n)
    walk = vec.copy()
    for k in range(degree):
        out += (t**k / math.factorial(k)) * walk
        walk = p_mat @ walk
    # after the loop walk = P^N e_s
    out += (t ** (degree - 1) / math.factorial(degree - 1)) * walk
    return out
