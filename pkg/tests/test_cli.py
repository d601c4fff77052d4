import csv
import io
import json
import subprocess
import sys

import pytest

from metricdim.cli import main, parse_range, UsageError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_graph_dot():
    code, text = run("graph", "8", "1", "--format", "dot")
    assert code == 0
    assert text.count(" -- ") == 8 and "0 -- 7" in text


def test_graph_json():
    code, text = run("graph", "8", "3", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["n"] == 8 and len(data["edges"]) == 24


def test_graph_csv_and_one_based():
    code, text = run("graph", "8", "3", "--format", "csv")
    assert text.splitlines()[0] == "0,1,1,1,2,1,1,1"
    code, text = run("graph", "8", "1", "--format", "json", "--one-based")
    assert json.loads(text)["edges"][0] == [1, 2]


def test_graph_out_of_range(capsys):
    code, _ = run("graph", "8", "5")
    assert code == 2
    assert "k must satisfy" in capsys.readouterr().err


def test_dims():
    code, text = run("dims", "8", "3", "--no-timing")
    reports = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert [(r["problem"], r["optimum"]) for r in reports] == [("beta", 4), ("psi", 4), ("sdim", 4)]
    assert all("millis" not in r for r in reports)


def test_dims_single_problem():
    code, text = run("dims", "8", "1", "--which", "beta")
    assert code == 0 and json.loads(text)["optimum"] == 2


def test_dims_both_methods():
    code, text = run("dims", "8", "3", "--which", "sdim", "--method", "both")
    reports = [json.loads(line) for line in text.splitlines()]
    assert [r["method"] for r in reports] == ["enumeration", "vertex_cover_reduction"]
    assert {r["optimum"] for r in reports} == {4}


def test_dims_budget_abort():
    code, text = run("dims", "16", "7", "--budget-subsets", "3")
    assert code == 3
    assert json.loads(text.splitlines()[-1])["error"] == "budget"


def test_dims_bad_problem():
    assert run("dims", "8", "3", "--which", "gamma")[0] == 2


def test_verify_range():
    code, text = run("verify", "--n", "8..16")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert len(rows) == 6 and all(r[-1] == "pass" for r in rows[1:])


def test_verify_single_and_odd_filter(capsys):
    assert run("verify", "--n", "8")[1].count("pass") == 1
    code, text = run("verify", "--n", "7..9")
    assert code == 0 and [r[0] for r in csv.reader(io.StringIO(text))][1:] == ["8"]
    assert "skipping n=7" in capsys.readouterr().err


def test_verify_json():
    code, text = run("verify", "--n", "8..10", "--format", "json")
    assert [json.loads(line)["verdict"] for line in text.splitlines()] == ["pass", "pass"]


def test_sweep():
    code, text = run("sweep", "--n", "8..10")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert [(int(r[0]), int(r[1])) for r in rows[1:]] == [
        (8, 1), (8, 2), (8, 3), (9, 1), (9, 2), (9, 3), (10, 1), (10, 2), (10, 3), (10, 4)]
    by_nk = {(r[0], r[1]): r[2:] for r in rows[1:]}
    assert by_nk[("8", "3")] == ["4", "4", "4", "4", "2"]
    assert by_nk[("8", "1")] == ["2", "3", "4", "2", "4"]


def test_witness_command():
    code, text = run("witness", "8", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["witness"] == [0, 1, 2, 3] and all(data["checks"].values())
    assert run("witness", "7")[0] == 2


@pytest.mark.parametrize("threads", ["2", "8"])
def test_thread_count_does_not_change_output(threads):
    base = run("verify", "--n", "8..12", "--no-timing", "--threads", "1")
    assert run("verify", "--n", "8..12", "--no-timing", "--threads", threads) == base


def test_parse_range():
    assert parse_range("8..10") == [8, 9, 10]
    assert parse_range("8") == [8]
    for bad in ("x", "10..8"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_usage_error_exit_code():
    assert run()[0] == 2
    assert run("graph", "8")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "metricdim", "witness", "10"], capture_output=True, text=True)
    assert proc.returncode == 0 and "{0, 1, 2, 3, 4}" in proc.stdout
