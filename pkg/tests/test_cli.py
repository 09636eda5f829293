import json
import subprocess
import sys

import pytest

from window_calculus import cli, verify


def run_json(capsys, *argv):
    code, _ = cli.run(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_poincare_json(capsys):
    code, rep = run_json(capsys, "poincare", "--m", "2", "--n", "4")
    assert code == 0
    assert rep["schemaVersion"] == 1 and rep["pass"] == "n/a"
    assert {int(d): c for d, c in rep["results"]["coefficients"].items()} == {-4: 1, -2: 1, 0: 2, 2: 1, 4: 1}
    code, rep2 = run_json(capsys, "poincare", "2", "4")
    assert rep2["results"] == rep["results"]


def test_rickard_cancel(capsys):
    code, rep = run_json(capsys, "rickard-cancel", "--i", "2")
    assert code == 0 and rep["pass"] == "pass"
    assert rep["results"]["leftover"] == {"l": 1, "lambda": [], "degree": -6}
    assert rep["results"]["pairs"] == 1


def test_non_generic_delta_is_usage_error(capsys):
    code, rep = cli.run(["window", "--N", "3", "--delta", "1/2", "--json"])
    captured = capsys.readouterr()
    assert code == 2 and rep is None
    assert captured.out == "" and "not generic" in captured.err


@pytest.mark.parametrize(
    "argv",
    [["bogus"], [], ["poincare"], ["lr", "--lam", "x"], ["lascoux", "--mode", "main", "--k", "2"], ["bwb", "--a", "3", "--b", "2"]],
)
def test_usage_errors(capsys, argv):
    code, _ = cli.run(argv)
    assert code == 2
    assert capsys.readouterr().out == ""


def test_output_is_byte_stable(capsys):
    argv = ["verify-cor-inv", "--k", "2", "--N", "5", "--json"]
    cli.run(argv)
    first = capsys.readouterr().out
    cli.run(argv)
    assert capsys.readouterr().out == first
    assert "elapsedMs" not in first


def test_timing_flag(capsys):
    code, rep = run_json(capsys, "betti", "--i", "4", "--l", "2", "--timing")
    assert code == 0 and isinstance(rep["elapsedMs"], int)
    assert rep["results"]["betti"] == {"0": 1, "1": 1, "2": 2, "3": 1, "4": 1}


@pytest.mark.parametrize(
    "argv",
    [
        ["window", "--N", "4", "--delta", "1/2", "--k", "2", "--weight=1,-1"],
        ["generators", "--k", "2", "--N", "4", "--delta", "1/2"],
        ["lr", "--lam", "1,0", "--mu=0,-1"],
        ["wedge-gl", "--r", "2", "--k", "2"],
        ["bwb", "--a", "1", "--b", "2", "--sub", "2"],
        ["rickard-catalog", "--k", "3"],
        ["lascoux", "--mode", "resolution", "--k", "2", "--i", "1"],
        ["lascoux", "--mode", "main", "--k", "2", "--N", "5", "--mu", "0,0", "--lam", "1,0"],
        ["lascoux", "--mode", "grassmannian", "--i", "4", "--l", "2"],
        ["verify-lem-resolni", "--kmax", "2"],
        ["verify-grade-restriction", "--kmax", "3"],
        ["verify-eq-las", "--k", "2", "--N", "4"],
    ],
)
def test_commands_succeed_in_both_formats(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == 0 and rep["command"] == argv[0]
    assert rep["pass"] in ("pass", "n/a")
    code, _ = cli.run(argv)
    assert code == 0
    assert capsys.readouterr().out.startswith(f"command: {argv[0]}")


def test_specific_payloads(capsys):
    _, rep = run_json(capsys, "window", "--N", "3", "--delta", "0.4")
    assert (rep["results"]["lo"], rep["results"]["hi"]) == (-1, 2)
    _, rep = run_json(capsys, "wedge-gl", "--r", "1", "--k", "2")
    assert rep["results"]["decomposition"] == [{"weight": [1, -1], "mult": 1}, {"weight": [0, 0], "mult": 1}]
    _, rep = run_json(capsys, "bwb", "--a", "1", "--b", "2", "--sub", "1")
    assert rep["results"]["zero"] is True


def test_verify_failure_exits_one_and_names_instance(capsys, monkeypatch):
    bad = {"lambda": [0, -1], "r": 2, "mu": [1, -1], "nu": [3, -1]}

    def fake(k, N, r_max=None):
        return {"pass": False, "checked": 1, "failureCount": 1, "failures": [bad], "rMax": 4}

    monkeypatch.setattr(verify, "verify_cor_inv", fake)
    code, rep = run_json(capsys, "verify-cor-inv", "--k", "2", "--N", "5")
    assert code == 1
    assert rep["pass"] == "fail" and rep["results"]["failures"] == [bad]
    code, _ = cli.run(["verify-cor-inv", "--k", "2", "--N", "5"])
    assert code == 1
    assert '"nu": [3, -1]' in capsys.readouterr().err


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("WINDOWCALC_THREADS", "zero")
    assert cli.run(["poincare", "1", "2"])[0] == 2
    monkeypatch.setenv("WINDOWCALC_THREADS", "2")
    code, rep = run_json(capsys, "verify-cor-inv", "--k", "2", "--N", "6")
    assert code == 0 and rep["pass"] == "pass"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "window_calculus", "poincare", "2", "4", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["text"] == "q^-4 + q^-2 + 2 + q^2 + q^4"
    proc = subprocess.run([sys.executable, "-m", "window_calculus", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
