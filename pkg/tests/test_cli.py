import io
import json
import subprocess
import sys

import pytest

from lozenge import cli, verify
from lozenge.report import VerificationReport


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_axis():
    assert run("count", "--N", "2", "--m", "1", "--l", "1", "--parity", "even") == (0, "8\n", "")
    code, out, _ = run("count", "axis", "--N", "3", "--m", "2", "--l", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"N": 3, "m": 2, "l": 2, "parity": "even", "count": "1372"}


def test_count_other_kinds():
    assert run("count", "macmahon", "--a", "2", "--b", "2", "--c", "2")[1] == "20\n"
    assert run("count", "oracle", "--a", "2", "--b", "2", "--c", "2")[1] == "20\n"
    assert run("count", "oracle", "--N", "2", "--m", "1", "--L", "1,2")[1] == "4\n"
    assert run("count", "--N", "2", "--m", "1", "--L", "1,2")[1] == "4\n"
    assert run("count", "conjecture", "--pattern", "skip2", "--N", "3", "--m", "1", "--r", "1")[1] == "75\n"


def test_count_usage_errors():
    code, out, err = run("count", "--N", "2", "--m", "1", "--l", "3", "--parity", "even")
    assert code == 2 and out == "" and "l out of range" in err
    assert run("count", "--N", "2", "--m", "1")[0] == 2
    assert run("count", "macmahon", "--a", "2")[0] == 2
    assert run("count", "--N", "2", "--m", "0", "--l", "1", "--parity", "odd")[0] == 2
    assert run("count", "oracle", "--N", "3", "--m", "2", "--l", "1", "--budget", "5")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("verify", "no-such-suite")[0] == 2
    assert run("count", "--N", "x")[0] == 2


def test_reconstruct_p():
    assert run("reconstruct-p", "--N", "2", "--l", "1")[1].splitlines()[0] == "3 + 3*m"
    assert run("reconstruct-p", "--N", "1", "--l", "1")[1] == "1\n"
    assert run("reconstruct-p", "--N", "3", "--l", "1")[1].splitlines() == [
        "60 + 90*m + 30*m^2", "= (m+1)_2 * (30)"]
    code, out, _ = run("reconstruct-p", "--N", "3", "--l", "2", "--json")
    assert json.loads(out)["coefficients"] == ["60", "108", "36"]
    assert run("reconstruct-p", "--N", "2", "--l", "5")[0] == 2


def test_asymptotics():
    code, out, err = run("asymptotics", "--a", "1", "--b", "0.5", "--N", "8,16,32")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 4
    gaps = [float(x.split(",")[-1]) for x in lines[1:]]
    assert gaps == sorted(gaps, reverse=True)
    code, out, err = run("asymptotics", "--a", "0", "--b", "0.5", "--N", "4")
    assert code == 0 and len(out.splitlines()) == 1 and "skipped N=4" in err
    assert run("asymptotics", "--a", "1", "--b", "1.5", "--N", "4")[0] == 2


def test_verify_reports():
    code, out, err = run("verify", "lemma-simple", "--max-N", "8", "--max-m", "8")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["cases"] == 81
    assert "PASS lemma-simple" in err
    code, out, _ = run("verify", "theorem1", "--max-N", "1", "--max-m", "1")
    assert code == 0 and json.loads(out)["cases"] == 1
    code, out, _ = run("verify", "conjectures", "--max-N", "4", "--max-m", "2")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_exit(monkeypatch):
    def broken(max_N=1, max_m=1, budget=None):
        rep = VerificationReport("broken", "one case")
        rep.record({"x": 1}, 1, 2)
        return rep

    monkeypatch.setitem(verify.SUITES, "theorem1", broken)
    code, out, _ = run("verify", "theorem1")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    assert rep["failures"] == [{"params": {"x": "1"}, "expected": "1", "actual": "2"}]


def test_output_is_deterministic_and_round_trips():
    a = run("verify", "factorization", "--max-N", "2", "--max-m", "1")[1]
    b = run("verify", "factorization", "--max-N", "2", "--max-m", "1")[1]
    assert a == b
    assert json.dumps(json.loads(a), sort_keys=True, indent=2) + "\n" == a
    c = run("count", "--N", "2", "--m", "1", "--l", "1", "--json")[1]
    assert json.dumps(json.loads(c), sort_keys=True) + "\n" == c


def test_budget_env(monkeypatch):
    monkeypatch.setenv("LOZENGE_BUDGET", "3")
    assert run("count", "oracle", "--N", "3", "--m", "2", "--l", "1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lozenge", "count", "--N", "2", "--m", "1", "--l", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"
    proc = subprocess.run([sys.executable, "-m", "lozenge", "count", "--N", "2", "--m", "1", "--l", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "l out of range" in proc.stderr
