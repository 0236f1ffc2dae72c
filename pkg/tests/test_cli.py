from __future__ import annotations

import json

import pytest

from liftmrd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def build_file(capsys, tmp_path, q, n, k, d, name="c.json"):
    path = tmp_path / name
    code, out, _ = run(capsys, "build", "--q", str(q), "--n", str(n), "--k", str(k), "--d", str(d), "--out", str(path))
    assert code == 0
    return path, out


def test_build_writes_codewords(capsys, tmp_path):
    path, out = build_file(capsys, tmp_path, 2, 6, 2, 2)
    assert out.strip() == "N=21"
    doc = json.loads(path.read_text())
    assert doc["N"] == "21" and len(doc["codewords"]) == 21
    assert all(len(U) == 2 and all(len(row) == 6 for row in U) for U in doc["codewords"])


def test_build_formula_only(capsys):
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "100", "--k", "10", "--d", "5")
    assert code == 0
    n = int(out.strip().removeprefix("N="))
    assert n > 2**540


def test_build_header_only_file(capsys, tmp_path):
    path = tmp_path / "h.json"
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "100", "--k", "10", "--d", "5", "--out", str(path), "--header-only")
    assert code == 0
    doc = json.loads(path.read_text())
    assert "codewords" not in doc and out.strip() == f"N={doc['N']}"


def test_build_invalid(capsys):
    code, out, err = run(capsys, "build", "--q", "2", "--n", "5", "--k", "3", "--d", "2")
    assert code == 2 and out == "" and err.startswith("error:") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [
    ["build", "--q", "6", "--n", "6", "--k", "2", "--d", "2"],
    ["size", "--q", "2", "--n", "6", "--k", "2", "--d", "3"],
    ["build", "--q", "2", "--n", "6", "--k", "2"],
    ["size", "--q", "x", "--n", "6", "--k", "2", "--d", "2"],
    ["mrd", "--q", "2", "--rows", "2", "--cols", "2", "--d", "0"],
    ["nonsense"],
    [],
])
def test_invalid_arguments_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_build_cap(capsys, tmp_path):
    code, _, err = run(capsys, "build", "--q", "2", "--n", "8", "--k", "3", "--d", "2", "--out", str(tmp_path / "x.json"), "--cap", "100")
    assert code == 3 and err.startswith("error:")


@pytest.mark.parametrize("argv,expected", [
    (("--q", "2", "--n", "6", "--k", "2", "--d", "2"), "N=21 closed_form=21"),
    (("--q", "2", "--n", "8", "--k", "3", "--d", "2"), "N=1089"),
    (("--q", "3", "--n", "6", "--k", "2", "--d", "2"), "N=91 closed_form=91"),
])
def test_size_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "size", *argv)
    assert code == 0 and out.strip() == expected


def test_verify_round_trip(capsys, tmp_path):
    path, _ = build_file(capsys, tmp_path, 2, 7, 2, 2)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.startswith("cardinality=OK min_distance=OK")


def test_verify_duplicate_fault(capsys, tmp_path):
    path, _ = build_file(capsys, tmp_path, 2, 6, 2, 2)
    doc = json.loads(path.read_text())
    doc["codewords"][7] = doc["codewords"][2]
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "cardinality=FAIL" in out


@pytest.mark.parametrize("params", [(2, 6, 2, 2), (2, 6, 3, 3)], ids=str)
def test_verify_overstated_distance(capsys, tmp_path, params):
    path, _ = build_file(capsys, tmp_path, *params)
    doc = json.loads(path.read_text())
    doc["d"] += 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and "min_distance=FAIL" in out


def test_verify_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", str(bad))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2
    bad.write_text(json.dumps({"q": 2, "n": 6, "k": 2, "d": 2, "N": "21", "components": []}))
    assert run(capsys, "verify", str(bad))[0] == 2


def test_verify_cap(capsys, tmp_path):
    path, _ = build_file(capsys, tmp_path, 2, 6, 2, 2)
    assert run(capsys, "verify", str(path), "--cap", "10")[0] == 3


@pytest.mark.parametrize("argv,expected", [
    (("--q", "2", "--rows", "3", "--cols", "4", "--d", "2"), "bound=256"),
    (("--q", "2", "--rows", "2", "--cols", "2", "--d", "2", "--verify"), "bound=4 min_rank_distance=2"),
    (("--q", "2", "--rows", "3", "--cols", "1", "--d", "2", "--verify"), "bound=1 min_rank_distance=n/a (trivial)"),
])
def test_mrd_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "mrd", *argv)
    assert code == 0 and out.strip() == expected


def test_mrd_cap(capsys):
    code, _, err = run(capsys, "mrd", "--q", "2", "--rows", "4", "--cols", "4", "--d", "1", "--verify", "--cap", "100")
    assert code == 3 and err.startswith("error:")


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--n-max", "8", "--k-max", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q,n,k,d,lifted_size,multi_size,ratio"
    assert any(line.startswith("2,6,3,2,64,65,") for line in lines)
    assert run(capsys, "table", "--q", "2", "--n-max", "8", "--k-max", "3", "--format", "csv")[1] == out


def test_table_empty(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--n-max", "1", "--k-max", "3", "--format", "csv")
    assert code == 0 and out == "q,n,k,d,lifted_size,multi_size,ratio\n"


def test_table_markdown_deterministic(capsys):
    argv = ("table", "--q", "2,3", "--n-max", "6", "--k-max", "2", "--format", "md")
    code, first, _ = run(capsys, *argv)
    assert code == 0 and first.startswith("| q | n | k | d |")
    assert "| 3 | 6 | 2 | 2 | 81 | 91 |" in first
    assert run(capsys, *argv)[1] == first
