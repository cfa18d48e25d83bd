from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qminkowski.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "--algebra", "r3", "c*b")
    assert code == 0
    assert out == "b*c + ((q^2-1)/(q^2+1))*h^2"


def test_normalize_r4_example(capsys):
    _, out, _ = run(capsys, "normalize", "--algebra", "r4", "q^2*h*b - b*h")
    assert out == "-((q^2-1)/q)*b*l"


def test_eval(capsys):
    _, out, _ = run(capsys, "normalize", "--algebra", "r3", "c*b", "--eval", "q=2")
    assert out == "b*c + (3/5)*h^2"
    _, out, _ = run(capsys, "normalize", "--algebra", "h2", "b*c", "--eval", "q=1,r=2")
    assert out == "-(1/4)*h^2 + 2"


def test_act(capsys):
    _, out, _ = run(capsys, "act", "--op", "X", "--theta", "0", "h")
    assert out == "-((q^2+1)/q)*b"
    _, out, _ = run(capsys, "act", "--op", "X", "--theta", "0", "h", "--eval", "q=1")
    assert out == "-2*b"
    _, out, _ = run(capsys, "act", "--op", "dl", "--algebra", "r4", "l^2")
    assert out == "2*l"
    _, out, _ = run(capsys, "act", "--op", "laplace", "b*c")
    assert out


def test_maxwell(capsys):
    code, out, _ = run(capsys, "maxwell", "--algebra", "r3", "--column", "b^2; 0; 0")
    assert code == 0
    assert len(out.splitlines()) == 3


@pytest.mark.parametrize("check", ["ybe", "hecke", "skew-inverse", "traces", "ch"])
def test_rmatrix(capsys, check):
    code, out, _ = run(capsys, "rmatrix", "--check", check)
    assert code == 0
    assert out.splitlines()[-1] == "pass"


@pytest.mark.parametrize(
    "argv",
    [
        ("normalize", "x*b"),
        ("normalize", "b c"),
        ("normalize", "b", "--eval", "r=2"),
        ("normalize", "b", "--eval", "q=abc"),
        ("act", "--op", "dl", "l"),
        ("maxwell", "--algebra", "h2", "--column", "b; 0; 0"),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["normalize", "--algebra", "r9", "b"])
    assert exc.value.code == 2


def test_verify_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--max-degree", "3", "--report", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["version"] == 1
    assert doc["config"]["max_degree"] == 3
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert out.splitlines()[-1].endswith("0 failing")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qminkowski.cli", "rmatrix", "--check", "ybe"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "pass"
