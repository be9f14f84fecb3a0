import subprocess
import sys

import pytest

from solvcore import cli
from solvcore.errors import VerificationError


def _invoke(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "solvcore", *argv], capture_output=True, text=True, env=env)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize("argv, expected", [
    (["wp", "-g", "S(2,2)", "x1 x2 X1 X2"], "no"),
    (["wp", "-g", "S(1,2)", "x1 x2 X1 X2"], "yes"),
    (["wp", "-g", "Z/3", "x1 x1 x1"], "yes"),
    (["cp", "--group", "S(2,2)", "x1 x2 X1 X2", "x1 x1"], "no"),
    (["cp", "-g", "S(2,2)", "x1 x2 X1 X2", "x1 x1 x2 X1 X2 X1"], "yes"),
    (["pp", "--group", "S(2,2)", "x1 x1", "x1"], "n = 2"),
    (["pp", "-g", "S(2,2)", "x1", "x2"], "no"),
    (["csp", "-g", "Z/3", "x1", "x1 x1"], "no"),
    (["csp", "-g", "wr(Z,Z)", "y1 x1", "x1 y1"], "conjugator: Y1"),
    (["cp", "-g", "wr(Z/2,Z/4)", "x1 y1 x1 Y1", "y1 x1 Y1"], "no"),
    (["cp", "-g", "wr(Z/2,S(2,2))", "x1 y1", "y2 x1 y1 Y2"], "yes"),
    (["pair", "-g", "wr(Z,Z)", "x1 y1 x1 x1 Y1 y1"], "y1 | y1 -> x1 ; 1 -> x1 x1"),
    (["pair", "-g", "wr(Z,Z)", "y1 Y1"], "1 |"),
    (["magnus", "-g", "S(2,2)", "x1 x2"], "mu = x1 x2 ; u[1] = 1*1 ; u[2] = 1*x1"),
    (["magnus", "-g", "S(2,2)", "x1 X1"], "mu = 1 ; u[1] = 0 ; u[2] = 0"),
])
def test_answers(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (0, expected)


def test_csp_answers_are_verified(capsys):
    code, out, _ = run(capsys, "csp", "-g", "S(3,2)", "x1 x2 X1 X2", "x2 x1 x2 X1 X2 X2", "--cross-check")
    assert code == 0 and out.startswith("conjugator: ")


@pytest.mark.parametrize("argv", [
    ["wp", "-g", "Z/0", "x1"],
    ["wp", "-g", "Z^2", "x9"],
    ["wp", "-g", "S(2,2)", "x1 q"],
    ["cp", "-g", "S(2,2)", "x1"],
    ["frobnicate"],
    ["wp", "-g", "wr(Z,Z"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ["magnus", "-g", "Z^2", "x1"],
    ["magnus", "-g", "S(1,2)", "x1"],
    ["pair", "-g", "S(2,2)", "x1"],
])
def test_unsupported(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "unsupported" in err


def test_verification_failure_exit_code(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise VerificationError("conjugator check failed")
    monkeypatch.setattr(cli.groups, "csp", broken)
    code, _, err = run(capsys, "csp", "-g", "S(2,2)", "x1", "x1")
    assert code == 4 and "verification" in err


def test_verbose_traces_to_stderr():
    r = _invoke("cp", "-v", "-g", "wr(Z,Z)", "y1 x1", "x1 y1")
    assert r.returncode == 0 and r.stdout == "yes\n"
    assert "solvcore.wreath" in r.stderr


def test_budget_flag(capsys):
    code, out, _ = run(capsys, "csp", "--budget", "0", "-g", "S(2,2)", "x1 x2", "x2 x1")
    assert code == 0 and out.startswith("conjugator: ")


def test_output_is_deterministic():
    argv = ["csp", "-g", "S(3,2)", "x1 x2 X1 X1 x2", "x2 x2 x1 x2 X1 X1 x2 X2"]
    a, b = _invoke(*argv), _invoke(*argv)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_budget_environment_variable():
    import os
    env = dict(os.environ, SOLVCORE_BUDGET="3")
    r = _invoke("csp", "-g", "S(2,2)", "x1", "x2 x1 X2", env=env)
    assert r.returncode == 0 and r.stdout.startswith("conjugator:")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("[PASS]") == len(out.splitlines()) >= 5
