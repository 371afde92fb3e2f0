import random
import threading

import pytest

from localcluster.frontier import Frontier, edge_map, frontier_filter, vertex_map
from localcluster.sparsevec import SparseVec

from .conftest import random_graph


def test_frontier_dedups_and_sizes():
    f = Frontier([3, 1, 3, 2, 1])
    assert len(f) == 3
    assert set(f) == {1, 2, 3}


class TestVertexMap:
    def test_single_vertex(self, k3):
        calls = []
        vertex_map(Frontier([0]), calls.append)
        assert calls == [0]

    def test_empty_frontier(self):
        calls = []
        vertex_map(Frontier([]), calls.append)
        assert calls == []

    def test_concurrent_counter(self):
        counter = SparseVec()
        vertex_map(Frontier(range(64)), lambda v: counter.accumulate(0, 1), threads=4)
        assert counter.read(0) == 64


class TestEdgeMap:
    def test_triangle_single_source(self, k3):
        calls = []
        edge_map(k3, Frontier([0]), lambda s, d: calls.append((s, d)))
        assert sorted(calls) == [(0, 1), (0, 2)]

    def test_both_endpoints_of_an_edge(self, k3):
        calls = []
        edge_map(k3, Frontier([0, 1]), lambda s, d: calls.append((s, d)))
        assert len(calls) == 4  # one call per direction per incident edge

    def test_worked_example_degree_sum(self, fig_graph):
        calls = []
        touched = edge_map(fig_graph, Frontier([0, 1]), lambda s, d: calls.append(d))
        assert len(calls) == 4  # d(0) + d(1) = 2 + 2
        assert len(touched) == 4

    def test_invocation_multiset_is_order_independent(self):
        rng = random.Random(1)
        g = random_graph(rng, 40)
        f = Frontier(rng.sample(range(40), 10))
        runs = []
        for threads in (1, 4):
            calls = []
            edge_map(g, f, lambda s, d: calls.append((s, d)), threads=threads)
            runs.append(sorted(calls))
        assert runs[0] == runs[1]

    def test_work_exactly_frontier_volume(self):
        rng = random.Random(2)
        g = random_graph(rng, 200)
        members = rng.sample(range(200), 5)
        f = Frontier(members)
        touched = edge_map(g, f, lambda s, d: None)
        assert len(touched) == sum(g.degree(v) for v in members)


class TestFrontierFilter:
    def test_dedup_plus_predicate(self):
        f = frontier_filter([1, 2, 2, 3], lambda v: v % 2 == 0)
        assert set(f) == {2}

    def test_empty_candidates(self):
        assert len(frontier_filter([], lambda v: True)) == 0

    def test_work_proportional_to_candidates(self):
        seen = []

        def pred(v):
            seen.append(v)
            return True

        frontier_filter([5, 5, 6, 6, 7], pred)
        assert len(seen) == 3  # deduped before predicate
