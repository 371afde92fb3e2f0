import json

import pytest

from localcluster.cli import cli_main
from localcluster.graph import conductance, read_binary

from .conftest import FIG_EDGES

EDGE_TEXT = "# worked example\n" + "\n".join(f"{u} {v}" for u, v in FIG_EDGES) + "\n"


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text(EDGE_TEXT)
    return path


@pytest.fixture
def binary_graph(tmp_path, edge_file):
    out = tmp_path / "g.bin"
    assert cli_main(["convert", "--input", str(edge_file), "--output", str(out)]) == 0
    return out


class TestConvert:
    def test_round_trip(self, binary_graph):
        with open(binary_graph, "rb") as f:
            g = read_binary(f)
        assert g.n == 8 and g.m == 8

    def test_deterministic_output(self, tmp_path, edge_file):
        a, b = tmp_path / "a.bin", tmp_path / "b.bin"
        cli_main(["convert", "--input", str(edge_file), "--output", str(a)])
        cli_main(["convert", "--input", str(edge_file), "--output", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_missing_input_fails(self, tmp_path):
        code = cli_main(["convert", "--input", str(tmp_path / "nope.txt"),
                         "--output", str(tmp_path / "o.bin")])
        assert code != 0


class TestCluster:
    def test_pr_nibble_json(self, binary_graph, capsys):
        code = cli_main([
            "cluster", "--graph", str(binary_graph), "--algo", "pr-nibble-opt",
            "--seed", "0", "--alpha", "0.01", "--eps", "1e-4", "--sweep",
        ])
        assert code == 0
        body = json.loads(capsys.readouterr().out)
        with open(binary_graph, "rb") as f:
            g = read_binary(f)
        assert body["conductance"] == conductance(g, body["cluster"])

    def test_hkpr_liveness(self, binary_graph, capsys):
        code = cli_main([
            "cluster", "--graph", str(binary_graph), "--algo", "hkpr",
            "--seed", "0", "--t", "10", "--N", "20", "--eps", "1e-7",
        ])
        assert code == 0
        body = json.loads(capsys.readouterr().out)
        assert body["support_size"] >= 1

    def test_unknown_algo_usage_error(self, binary_graph):
        code = cli_main(["cluster", "--graph", str(binary_graph),
                         "--algo", "wat", "--seed", "0"])
        assert code != 0

    def test_seed_out_of_range(self, binary_graph, capsys):
        code = cli_main(["cluster", "--graph", str(binary_graph),
                         "--algo", "nibble", "--seed", "99"])
        assert code != 0


class TestNcp:
    def test_csv_on_stdout(self, binary_graph, capsys):
        code = cli_main(["ncp", "--graph", str(binary_graph), "--seeds", "3"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("bucket_min_size,")
        assert len(lines) >= 2


class TestBench:
    def test_small_synthetic(self, capsys):
        code = cli_main(["bench", "--n", "2000", "--walks", "2000", "--threads", "2"])
        assert code == 0
        out = capsys.readouterr().out
        assert "sweep" in out and "nibble" in out


def test_unknown_subcommand():
    assert cli_main(["frobnicate"]) != 0
