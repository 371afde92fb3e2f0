import io
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localcluster.graph import (
    EdgeListParseError,
    Graph,
    GraphFormatError,
    build_graph,
    conductance,
    parse_edge_list,
    read_binary,
    volume,
    write_binary,
)

from .conftest import conductance_oracle, random_graph


class TestParseEdgeList:
    def test_comments_skipped(self):
        assert parse_edge_list(io.StringIO("# c\n0 1\n1 2\n")) == [(0, 1), (1, 2)]

    def test_self_loop_passes_through(self):
        assert parse_edge_list(io.StringIO("0 0\n")) == [(0, 0)]

    def test_malformed_line_reports_number(self):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list(io.StringIO("3 x\n"))
        assert exc.value.line_number == 1

    def test_blank_lines_ignored(self):
        assert parse_edge_list(io.StringIO("\n0 1\n\n")) == [(0, 1)]

    def test_negative_rejected(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list(io.StringIO("0 -1\n"))


class TestBuildGraph:
    def test_dedup_and_loop_removal(self):
        g = build_graph([(0, 1), (1, 0), (1, 1), (0, 1)])
        assert g.n == 2 and g.m == 1
        assert list(g.neighbors_of(0)) == [1]

    def test_triangle(self):
        g = build_graph([(0, 1), (1, 2), (0, 2)])
        assert g.n == 3 and g.m == 3
        assert all(g.degree(v) == 2 for v in range(3))

    def test_worked_example_degrees(self, fig_graph):
        assert fig_graph.n == 8 and fig_graph.m == 8
        assert [fig_graph.degree(v) for v in range(4)] == [2, 2, 3, 4]

    def test_empty_input(self):
        g = build_graph([])
        assert g.n == 0 and g.m == 0

    def test_isolated_trailing_vertices(self):
        g = build_graph([(0, 1)], num_vertices=5)
        assert g.n == 5 and g.degree(4) == 0

    def test_adjacency_sorted(self):
        g = build_graph([(0, 3), (0, 1), (0, 2)])
        assert list(g.neighbors_of(0)) == [1, 2, 3]

    def test_asymmetric_without_symmetrize_rejected(self):
        with pytest.raises(ValueError, match="reverse"):
            build_graph([(0, 1)], symmetrize=False)

    def test_idempotent_rebuild(self):
        rng = random.Random(5)
        g = random_graph(rng, 50)
        assert build_graph(list(g.edge_pairs()), symmetrize=False, num_vertices=g.n) == g


class TestConductance:
    def test_triangle_singleton(self, k3):
        assert conductance(k3, {0}) == 1.0

    def test_worked_example_set(self, fig_graph):
        assert conductance(fig_graph, {0, 1, 2}) == pytest.approx(1 / 7)

    def test_full_set_degenerate(self, k3):
        assert conductance(k3, {0, 1, 2}) == 1.0

    def test_empty_set_rejected(self, k3):
        with pytest.raises(ValueError):
            conductance(k3, set())

    def test_out_of_range_rejected(self, k3):
        with pytest.raises(ValueError):
            conductance(k3, {7})

    def test_matches_brute_force_oracle(self):
        rng = random.Random(11)
        for _ in range(300):
            g = random_graph(rng, rng.randint(2, 200))
            k = rng.randint(1, g.n)
            s = set(rng.sample(range(g.n), k))
            assert conductance(g, s) == conductance_oracle(g, s)

    def test_complement_symmetry(self):
        rng = random.Random(3)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 60))
            k = rng.randint(1, g.n - 1)
            s = set(rng.sample(range(g.n), k))
            comp = set(range(g.n)) - s
            assert conductance(g, s) == conductance(g, comp)

    def test_volume_partition(self):
        rng = random.Random(4)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 60))
            k = rng.randint(1, g.n - 1)
            s = set(rng.sample(range(g.n), k))
            comp = set(range(g.n)) - s
            assert volume(g, s) + volume(g, comp) == 2 * g.m


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=0, max_size=80
    )
)
def test_build_graph_invariants(pairs):
    g = build_graph(pairs)
    degs = np.diff(g.offsets)
    assert g.offsets[0] == 0
    assert g.offsets[-1] == 2 * g.m
    assert (degs >= 0).all()
    for v in range(g.n):
        adj = list(g.neighbors_of(v))
        assert v not in adj
        assert adj == sorted(set(adj))
        for w in adj:
            assert v in g.neighbors_of(w)


class TestBinaryRoundTrip:
    def _round_trip(self, g: Graph) -> Graph:
        buf = io.BytesIO()
        write_binary(g, buf)
        buf.seek(0)
        return read_binary(buf)

    def test_triangle(self, k3):
        assert self._round_trip(k3) == k3

    def test_empty_graph_is_header_only(self):
        g = build_graph([])
        buf = io.BytesIO()
        write_binary(g, buf)
        assert len(buf.getvalue()) == 28
        buf.seek(0)
        assert read_binary(buf).n == 0

    def test_random_graphs(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 100))
            assert self._round_trip(g) == g

    def test_bad_magic(self):
        with pytest.raises(GraphFormatError, match="magic"):
            read_binary(io.BytesIO(b"NOPE" + b"\x00" * 24))

    def test_truncated(self, k3):
        buf = io.BytesIO()
        write_binary(k3, buf)
        data = buf.getvalue()
        with pytest.raises(GraphFormatError, match="truncated"):
            read_binary(io.BytesIO(data[:-4]))

    def test_inconsistent_edge_count(self, k3):
        buf = io.BytesIO()
        write_binary(k3, buf)
        data = bytearray(buf.getvalue())
        data[12] = 9  # corrupt m
        with pytest.raises(GraphFormatError):
            read_binary(io.BytesIO(bytes(data)))
