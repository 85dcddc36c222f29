import json
import math

import networkx as nx
import pandas as pd
import pytest

from src.cli.commands import EXIT_DOMAIN, EXIT_FAILURES, EXIT_OK, EXIT_PARSE, EXIT_SIZE, exit_code_for, main
from src.errors import AlphaBoundary, NotRegular, SizeMismatch
from src.graphs.edgelist import parse_edge_list, read_edge_list, write_edge_list
from src.graphs.families import make_named


def _spectrum(capsys, *argv):
    assert main(["spectrum", *argv]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


# ---------- construct ----------


def test_construct_pineapple_to_stdout(capsys):
    assert main(["construct", "--family", "pineapple", "--p", "5", "--q", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    *edge_lines, info = out.strip().splitlines()
    assert info == "n=8 m=13 regular=no bipartite=no"
    g = parse_edge_list("\n".join(edge_lines))
    assert (g.n, g.edge_count) == (8, 13)


def test_construct_single_vertex(capsys):
    assert main(["construct", "--family", "complete", "--n", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "1"
    assert lines[1] == "n=1 m=0 regular=yes (k=0) bipartite=yes"


def test_construct_cartesian_from_files(tmp_path, capsys):
    k2 = write_edge_list(make_named("complete", 2), tmp_path / "k2.el")
    out = tmp_path / "c4.el"
    code = main(["construct", "--op", "cartesian", "--g", str(k2), "--h", str(k2), "--out", str(out)])
    assert code == EXIT_OK
    assert "regular=yes (k=2) bipartite=yes" in capsys.readouterr().out
    assert nx.is_isomorphic(read_edge_list(out).to_networkx(), nx.cycle_graph(4))


def test_construct_coalesce_with_tokens(capsys):
    assert main(["construct", "--op", "coalesce", "--g", "c3", "--h", "c3", "--u", "0", "--v", "0"]) == EXIT_OK
    assert capsys.readouterr().out.strip().endswith("n=5 m=6 regular=no bipartite=no")


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--family", "pineapple", "--p", "5"],
        ["construct"],
        ["construct", "--family", "cycle", "--n", "4", "--op", "union"],
        ["construct", "--family", "cycle", "--n", "2"],
        ["construct", "--op", "union", "--g", "c4"],
    ],
)
def test_construct_parameter_errors(argv, capsys):
    assert main(argv) == EXIT_PARSE
    assert capsys.readouterr().err.startswith("error: ")


def test_unknown_family_is_an_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "wheel", "--n", "5"])
    assert exc.value.code == 2


# ---------- spectrum ----------


def test_spectrum_complete_at_one(capsys):
    result = _spectrum(capsys, "--graph", "k4", "--alpha", "1")
    assert result == {"alpha": 1.0, "spectrum": [{"value": 3.0, "multiplicity": 4}]}


def test_spectrum_complete_interior(capsys):
    result = _spectrum(capsys, "--graph", "k5", "--alpha", "0.3")
    assert result["spectrum"] == [
        {"value": 1.9, "multiplicity": 4},
        {"value": -1.6, "multiplicity": 1},
    ]


def test_spectrum_path_at_zero(tmp_path, capsys):
    path = write_edge_list(make_named("path", 3), tmp_path / "p3.el")
    records = _spectrum(capsys, "--graph", str(path), "--alpha", "0")["spectrum"]
    assert [r["value"] for r in records] == pytest.approx([math.sqrt(2), 0.0, -math.sqrt(2)], abs=1e-11)
    assert records[1]["value"] == 0.0


def test_spectrum_table(capsys):
    assert main(["spectrum", "--graph", "c4", "--alpha", "0.5", "--format", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("L_alpha spectrum at alpha=0.5 (n=4)")
    assert "multiplicity" in out


def test_spectrum_errors(tmp_path, capsys):
    assert main(["spectrum", "--graph", "k4", "--alpha", "1.5"]) == EXIT_DOMAIN
    assert main(["spectrum", "--graph", "k4", "--alpha", "-0.1"]) == EXIT_DOMAIN
    assert main(["spectrum", "--graph", "zz9", "--alpha", "0.5"]) == EXIT_PARSE

    bad = tmp_path / "bad.el"
    bad.write_text("3\n0 0\n")
    assert main(["spectrum", "--graph", str(bad), "--alpha", "0.5"]) == EXIT_PARSE
    assert "error:" in capsys.readouterr().err


def test_spectrum_undecodable_file(tmp_path, capsys):
    path = tmp_path / "latin1.el"
    path.write_bytes(b"2\n0 1\xff\n")
    assert main(["spectrum", "--graph", str(path), "--alpha", "0.5"]) == EXIT_PARSE
    assert capsys.readouterr().err.startswith("error: cannot read")


# ---------- charpoly ----------


@pytest.mark.parametrize(
    "graph, alpha, expected",
    [
        ("k2", "0.5", [1.0, -1.0, 0.0]),
        ("p3", "0", [1.0, 0.0, -2.0, 0.0]),
        ("k1", "0.7", [1.0, 0.0]),
    ],
)
def test_charpoly(graph, alpha, expected, capsys):
    assert main(["charpoly", "--graph", graph, "--alpha", alpha]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == pytest.approx(expected, abs=1e-12)


def test_charpoly_size_limit(capsys):
    assert main(["charpoly", "--graph", "k21", "--alpha", "0.5"]) == EXIT_SIZE
    assert "n=21" in capsys.readouterr().err


# ---------- sweep ----------


def test_sweep_to_stdout(capsys):
    assert main(["sweep", "--graph", "k2", "--steps", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "alpha,lambda_1,lambda_2"
    assert lines[1] == "0,1,-1"
    assert len(lines) == 4


def test_sweep_to_file(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--graph", "c5", "--alpha-start", "0.5", "--steps", "6", "--out", str(out)]) == EXIT_OK
    assert "wrote 6 rows" in capsys.readouterr().out
    df = pd.read_csv(out)
    assert list(df["alpha"]) == pytest.approx([0.5, 0.6, 0.7, 0.8, 0.9, 1.0])
    assert df.shape == (6, 6)


def test_sweep_bad_range():
    assert main(["sweep", "--graph", "k2", "--alpha-start", "0.8", "--alpha-end", "0.2"]) == EXIT_DOMAIN
    assert main(["sweep", "--graph", "k2", "--steps", "1"]) == EXIT_PARSE


# ---------- verify ----------


def test_verify_single_theorem(capsys):
    assert main(["verify", "--theorem", "join-regular", "--g", "c4", "--h", "c4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "join-regular[g=c4,h=c4]" in out
    assert "1 cases: 1 pass, 0 fail, 0 skipped, 0 expected-negative" in out


def test_verify_expected_negative_json(capsys):
    code = main(["verify", "--theorem", "bipartite-equiv", "--g", "c5", "--json"])
    assert code == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["reports"][0]["status"] == "expected-negative"
    assert result["summary"]["ok"] is True


def test_verify_with_edge_list_and_grid(tmp_path, capsys):
    g = write_edge_list(make_named("cycle", 6), tmp_path / "c6.el")
    code = main(["verify", "--theorem", "regular-shift", "--g", str(g), "--alpha-grid", "5", "--json"])
    assert code == EXIT_OK
    (report,) = json.loads(capsys.readouterr().out)["reports"]
    assert report["status"] == "pass"
    assert report["case"]["alphas"] == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_verify_unexpected_failure_exit_code(capsys):
    # below double precision
    code = main(["verify", "--theorem", "star", "--n", "7", "--tol", "1e-300", "--json"])
    assert code == EXIT_FAILURES
    assert json.loads(capsys.readouterr().out)["summary"]["fail"] == 1


def test_verify_rejects_bad_tolerance():
    assert main(["verify", "--theorem", "complete", "--n", "3", "--tol", "0"]) == EXIT_PARSE


def test_exit_code_mapping():
    assert exit_code_for(AlphaBoundary("x")) == EXIT_DOMAIN
    assert exit_code_for(SizeMismatch("x")) == EXIT_SIZE
    assert exit_code_for(NotRegular("x")) == EXIT_PARSE
