"""
Test the command-line front end through main(argv, out)
"""
import csv
import io
import json

import pytest

import src.cli as cli
from src.errors import InvariantViolationError
from src.graph_core import BookB, TwoCliques2K, build_family, complete_graph
from src.cli import main, parse_forbidden


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


@pytest.fixture
def cache_args(tmp_path):
    return ["--cache-path", str(tmp_path / "cli.jsonl")]


@pytest.mark.cli
def test_turan_clique_count():
    assert run(["turan", "--n", "6", "--r", "3", "--k", "3"]) == (0, "8\n")


@pytest.mark.cli
def test_turan_graph6():
    code, output = run(["turan", "--n", "5", "--r", "5"])
    assert (code, output) == (0, "D~{\n")


@pytest.mark.cli
def test_cliques():
    assert run(["cliques", "--graph", "K5", "--k", "3"]) == (0, "10\n")


@pytest.mark.cli
def test_ineq_csv():
    code, output = run(["ineq", "--k", "3", "--r-max", "10", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(output)))
    assert code == 0
    assert len(rows) == 8
    assert rows[0] == {"k": "3", "r": "3", "lhs": "3/4", "rhs": "1/1", "contradiction": "True"}


@pytest.mark.cli
def test_sandwich_json(cache_args):
    code, output = run(["sandwich", "--n", "4", "--k", "3", "--f", "K3", *cache_args])
    data = json.loads(output)
    assert code == 0
    assert (data["edges"], data["generalized"], data["colored"], data["berge"]) == (4, 0, 4, 2)
    assert data["complete"] is True


@pytest.mark.cli
def test_ex_uses_cache(cache_args):
    first = json.loads(run(["ex", "--n", "6", "--f", "C4", *cache_args])[1])
    second = json.loads(run(["ex", "--n", "6", "--f", "C4", *cache_args])[1])
    assert first["value"] == second["value"] == 7
    assert second["from_cache"] is True


def test_parse_forbidden_tokens(tmp_path):
    assert parse_forbidden("K4") == complete_graph(4)
    assert parse_forbidden("C5").edge_count() == 5
    assert parse_forbidden("P3").edge_count() == 2
    assert parse_forbidden("B_2_1") == build_family(BookB(2)) == parse_forbidden("bowtie")
    assert parse_forbidden("2K_3") == build_family(TwoCliques2K(2))
    assert parse_forbidden("petersen").edge_count() == 15
    assert parse_forbidden("D~{") == complete_graph(5)
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    assert parse_forbidden(f"@{path}").edge_count() == 2


@pytest.mark.cli
@pytest.mark.parametrize(
    "argv,code",
    [
        (["turan", "--n", "5", "--r", "0"], 1),
        (["cliques", "--graph", "not-a-graph", "--k", "3"], 1),
        (["frobnicate"], 1),
        (["ineq", "--k", "2", "--r", "5"], 1),
        (["ex", "--n", "10", "--f", "K3", "--no-cache"], 2),
        (["ex-berge", "--n", "5", "--k", "6", "--f", "K3", "--no-cache"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


@pytest.mark.cli
def test_invariant_violation_exit_code(monkeypatch):
    def broken(*args, **kwargs):
        raise InvariantViolationError("chain broken")

    monkeypatch.setattr(cli, "verify_sandwich", broken)
    assert run(["sandwich", "--n", "4", "--k", "3", "--f", "K3", "--no-cache"])[0] == 3


@pytest.mark.cli
def test_expansion_human():
    assert run(["expansion", "--f", "K3", "--k", "3", "--format", "human"]) == (0, "3 6 : 0 1 3 ; 0 2 4 ; 1 2 5\n")


@pytest.mark.cli
def test_berge_check():
    code, output = run(["berge-check", "--hypergraph", "3 5 : 0 1 3 ; 1 2 4 ; 0 2 3", "--f", "K3"])
    data = json.loads(output)
    assert code == 0 and data["contains"] is True
    assert len(data["witness"]["edge_assignment"]) == 3
    code, output = run(["berge-check", "--hypergraph", "3 4 : 0 1 2 ; 0 1 3", "--f", "K3"])
    assert json.loads(output) == {"contains": False, "witness": None}


@pytest.mark.cli
def test_symmetrize_history(tmp_path):
    history = tmp_path / "history.csv"
    code, output = run([
        "symmetrize", "--n", "6", "--k", "3", "--f", "K4",
        "--seed", "4", "--budget", "50", "--restarts", "2", "--history", str(history),
    ])
    data = json.loads(output)
    assert code == 0
    assert data["target"] == 8 and data["g"] >= 8
    assert data["restarts"] == 2
    lines = history.read_text().splitlines()
    assert lines[0] == "step,g"
    assert lines[1] == "0,8"


@pytest.mark.cli
def test_invariants_bowtie():
    code, output = run(["invariants", "--f", "bowtie"])
    data = json.loads(output)
    assert code == 0
    assert (data["chi"], data["sigma"]) == (3, 1)
    assert data["critical_edges"] == []
    assert data["critical_vertices"] == [0]


@pytest.mark.cli
def test_ineq_defaults_to_csv():
    code, output = run(["ineq", "--k", "3", "--r-max", "10"])
    rows = list(csv.DictReader(io.StringIO(output)))
    assert code == 0
    assert len(rows) == 8
    assert all(row["contradiction"] == "True" for row in rows)
    code, output = run(["ineq", "--k", "5", "--r", "5", "--format", "json"])
    assert code == 0 and json.loads(output)["contradiction"] is False


@pytest.mark.cli
def test_unwritable_history_path(tmp_path):
    target = tmp_path / "missing-dir" / "history.csv"
    argv = ["symmetrize", "--n", "6", "--k", "3", "--f", "K4", "--budget", "0", "--history", str(target)]
    assert run(argv)[0] == 1
