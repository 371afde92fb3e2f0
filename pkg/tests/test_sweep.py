import random

import numpy as np
import pytest

from localcluster.graph import build_graph, conductance
from localcluster.sparsevec import SparseVec
from localcluster.sweep import (
    EmptySweepInput,
    emit_cut_pairs,
    rank_order,
    sweep_parallel,
    sweep_sequential,
)

from .conftest import random_graph

# the 22-pair array for the worked-example ordering under sorted adjacency
EXPECTED_PAIRS = [
    (1, 1), (-1, 2), (1, 1), (-1, 3),
    (0, 2), (0, 1), (1, 2), (-1, 3),
    (0, 3), (0, 1), (0, 3), (0, 2), (1, 3), (-1, 4),
    (0, 4), (0, 3), (1, 4), (-1, 5), (1, 4), (-1, 5), (1, 4), (-1, 5),
]


class TestRankOrder:
    def test_tie_breaks_by_id(self, k3):
        p = SparseVec([(2, 0.5), (0, 0.5)])
        assert rank_order(k3, p) == [0, 2]

    def test_ratio_comparison(self):
        g = build_graph([(0, 1), (0, 2), (0, 3), (4, 5), (4, 6)])
        p = SparseVec([(0, 0.9), (4, 0.8)])  # ratios 0.3 vs 0.4
        assert rank_order(g, p) == [4, 0]

    def test_single_entry(self, k3):
        assert rank_order(k3, SparseVec([(1, 0.2)])) == [1]

    def test_nonpositive_dropped(self, k3):
        p = SparseVec([(0, 0.5), (1, 0.0), (2, -0.1)])
        assert rank_order(k3, p) == [0]

    def test_all_nonpositive_rejected(self, k3):
        with pytest.raises(EmptySweepInput):
            rank_order(k3, SparseVec([(0, 0.0)]))

    def test_degree_zero_dropped(self):
        g = build_graph([(0, 1)], num_vertices=3)
        p = SparseVec([(0, 0.5), (2, 0.9)])
        assert rank_order(g, p) == [0]


class TestWorkedExample:
    def test_sequential_profile(self, fig_graph, fig_mass):
        prof = sweep_sequential(fig_graph, fig_mass)
        assert prof.order == [0, 1, 2, 3]
        assert prof.prefix_volume.tolist() == [2, 4, 7, 11]
        assert prof.prefix_crossing.tolist() == [2, 2, 1, 3]
        assert prof.best_index == 3
        assert sorted(prof.best_set) == [0, 1, 2]
        assert prof.prefix_conductance[2] == pytest.approx(1 / 7)

    def test_parallel_profile(self, fig_graph, fig_mass):
        prof = sweep_parallel(fig_graph, fig_mass)
        assert prof.prefix_volume.tolist() == [2, 4, 7, 11]
        assert prof.prefix_crossing.tolist() == [2, 2, 1, 3]
        assert sorted(prof.best_set) == [0, 1, 2]

    def test_pair_array_matches_worked_example(self, fig_graph, fig_mass):
        order = rank_order(fig_graph, fig_mass)
        assert emit_cut_pairs(fig_graph, order) == EXPECTED_PAIRS

    def test_conductance_curve(self, fig_graph, fig_mass):
        prof = sweep_sequential(fig_graph, fig_mass)
        assert prof.prefix_conductance.tolist() == pytest.approx([1.0, 0.5, 1 / 7, 0.6])


def brute_force_profile(g, p):
    """Recount every prefix from scratch: O(N * vol)."""
    order = rank_order(g, p)
    volumes, crossings = [], []
    for j in range(1, len(order) + 1):
        s = set(order[:j])
        vol = sum(g.degree(v) for v in s)
        crossing = sum(1 for v in s for w in g.neighbors_of(v) if int(w) not in s)
        volumes.append(vol)
        crossings.append(crossing)
    return order, volumes, crossings


def random_mass(rng, g):
    k = rng.randint(1, max(1, g.n // 3))
    vec = SparseVec()
    for v in rng.sample(range(g.n), k):
        vec.assign(v, rng.uniform(0.01, 1.0))
    return vec


class TestEquivalence:
    def test_parallel_equals_sequential_and_oracle(self):
        rng = random.Random(21)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 120))
            p = random_mass(rng, g)
            try:
                seq = sweep_sequential(g, p)
            except EmptySweepInput:
                continue
            par = sweep_parallel(g, p)
            assert seq.order == par.order
            assert seq.prefix_volume.tolist() == par.prefix_volume.tolist()
            assert seq.prefix_crossing.tolist() == par.prefix_crossing.tolist()
            assert seq.best_index == par.best_index
            assert seq.best_set == par.best_set
            np.testing.assert_array_equal(seq.prefix_conductance, par.prefix_conductance)
            order, volumes, crossings = brute_force_profile(g, p)
            assert seq.order == order
            assert seq.prefix_volume.tolist() == volumes
            assert seq.prefix_crossing.tolist() == crossings

    def test_final_crossing_matches_boundary_scan(self):
        from localcluster.graph import boundary

        rng = random.Random(22)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 80))
            p = random_mass(rng, g)
            try:
                prof = sweep_sequential(g, p)
            except EmptySweepInput:
                continue
            assert prof.prefix_crossing[-1] == boundary(g, prof.order)

    def test_best_conductance_matches_independent_recount(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_graph(rng, rng.randint(3, 60))
            p = random_mass(rng, g)
            try:
                prof = sweep_sequential(g, p)
            except EmptySweepInput:
                continue
            assert prof.prefix_conductance[prof.best_index - 1] == conductance(
                g, prof.best_set
            )


class TestWorkLocality:
    def test_edges_scanned_proportional_to_ordered_volume(self):
        rng = random.Random(24)
        g = random_graph(rng, 3000)
        p = SparseVec()
        members = rng.sample(range(g.n), 12)
        for v in members:
            p.assign(v, rng.uniform(0.1, 1.0))
        vol = sum(g.degree(v) for v in members if g.degree(v) > 0)
        for prof in (sweep_sequential(g, p), sweep_parallel(g, p)):
            assert prof.edges_scanned == vol
            assert prof.edges_scanned < g.m  # never proportional to the graph
