import json
import os
import subprocess
import sys

import pytest

from minkpath.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def data(name):
    return os.path.join(DATA, name)


def test_exact_path3(capsys):
    code, out, _ = run(capsys, "exact", "-k", "3", "--seed", "7", "--reps", "60", data("path3.graph"))
    rep = json.loads(out)
    assert code == 0 and rep["weight"] == 12 and rep["path"] is None
    assert rep["mode"] == "exact" and rep["seed"] == 7 and rep["repetitions"] == 60


def test_exact_recover(capsys):
    code, out, _ = run(capsys, "exact", "-k", "3", "--recover", data("path3.graph"))
    assert code == 0 and json.loads(out)["path"] == [1, 2, 3]


def test_k_exceeds_n(capsys):
    code, out, _ = run(capsys, "exact", "-k", "5", "--seed", "7", data("triangle.graph"))
    assert code == 1 and json.loads(out)["weight"] is None


def test_approx_matches_oracle(capsys):
    _, out, _ = run(capsys, "oracle", "-k", "4", data("real.graph"))
    best = json.loads(out)["weight"]
    code, out, _ = run(capsys, "approx", "-k", "4", "--eps", "0.1", "--seed", "7", data("real.graph"))
    rep = json.loads(out)
    assert code == 0 and best <= rep["weight"] <= 1.1 * best
    assert rep["iterations"]["count"] == len(rep["iterations"]["trace"]) - 1


def test_bounded(capsys):
    code, out, _ = run(capsys, "bounded", "-k", "3", "--cap", "11", data("path3.graph"))
    assert code == 1
    code, out, _ = run(capsys, "bounded", "-k", "3", "--cap", "12", data("path3.graph"))
    assert code == 0 and json.loads(out)["weight"] == 12


def test_tree_and_oracle_tree(capsys, tmp_path):
    g = tmp_path / "u.graph"
    g.write_text("p undirected 3 3\ne 1 2 1\ne 2 3 2\ne 3 1 4\n")
    code, out, _ = run(capsys, "tree", "--tree", data("star3.tree"), "--recover", str(g))
    rep = json.loads(out)
    assert code == 0 and rep["weight"] == 3 and rep["embedding"][0] == 2
    code, out, _ = run(capsys, "oracle", "--tree", data("star3.tree"), str(g))
    assert json.loads(out)["weight"] == 3
    code, out, _ = run(capsys, "tree-approx", "--tree", data("star3.tree"), str(g))
    assert code == 0 and json.loads(out)["weight"] == 3


def test_deterministic_output(capsys):
    argv = ["exact", "-k", "3", "--seed", "7", "--recover", "--no-timing", data("triangle.graph")]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("e 1 2 5\n")
    code, _, err = run(capsys, "exact", "-k", "3", str(bad))
    assert code == 2 and "line 1" in err
    assert run(capsys, "exact", "-k", "3", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "exact", data("path3.graph"))[0] == 2
    assert run(capsys, "tree", data("path3.graph"))[0] == 2
    assert run(capsys, "exact", "-k", "3", data("real.graph"))[0] == 2
    assert run(capsys, "exact", "-k", "3", "--M", "6", data("path3.graph"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_malformed_tree_is_usage_error(capsys, tmp_path):
    t = tmp_path / "bad.tree"
    t.write_text("t 3\ne 1 2\ne 2 1\n")
    assert run(capsys, "tree", "--tree", str(t), data("path3.graph"))[0] == 2


def test_internal_failure_exit_code(capsys, monkeypatch):
    from minkpath import cli
    from minkpath.exceptions import RecoveryFailed

    def boom(*a, **kw):
        raise RecoveryFailed("no batch accepted")

    monkeypatch.setattr(cli, "recover_path", boom)
    code, _, err = run(capsys, "exact", "-k", "3", "--recover", data("path3.graph"))
    assert code == 3 and "no batch accepted" in err


def test_bench_csv_and_json(capsys):
    code, out, _ = run(capsys, "bench", "-k", "3", "4", "-n", "8", "--M", "4", "--warmup", "0")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "k,n,M,mode,eps,elapsed" and len(lines) == 3
    code, out, _ = run(capsys, "bench", "--mode", "approx", "-k", "3", "-n", "6", "--M", "100", "--eps", "0.5", "--json")
    rows = json.loads(out)
    assert rows[0]["mode"] == "approx" and rows[0]["eps"] == 0.5


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "minkpath.cli", "oracle", "-k", "3", data("triangle.graph")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["weight"] == 3
