import io
import json
import subprocess
import sys

import pytest

from magicbases.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_mrose(capsys):
    code, out, err = run(capsys, "magic", "build-mrose", "--t", "2")
    d = json.loads(out)
    assert code == 0 and err == ""
    assert d["n"] == 18 and len(d["edges"]) == 57 and d["mode"] == "bijective"


def test_build_then_verify_file(capsys, tmp_path):
    _, out, _ = run(capsys, "magic", "build-mrose", "--t", "1")
    f = tmp_path / "lab.json"
    f.write_text(out)
    code, out, err = run(capsys, "magic", "verify", "--file", str(f))
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_stdin(capsys, monkeypatch):
    _, out, _ = run(capsys, "magic", "build-mrose", "--t", "1")
    code, _, _ = run(capsys, "magic", "verify", "--file", "-", stdin=out, monkeypatch=monkeypatch)
    assert code == 0


def test_tampered_labelling(capsys, tmp_path):
    _, out, _ = run(capsys, "magic", "build-mrose", "--t", "1")
    d = json.loads(out)
    d["edge_labels"][0] = d["vertex_labels"][2]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(d))
    code, out, err = run(capsys, "magic", "verify", "--file", str(f))
    assert code == 1
    assert f"labels_distinct (witness: {d['vertex_labels'][2]})" in err
    assert "check failed" not in out


def test_pad_roundtrip(capsys, tmp_path):
    _, out, _ = run(capsys, "magic", "build-mrose", "--t", "1")
    f = tmp_path / "lab.json"
    f.write_text(out)
    code, out, _ = run(capsys, "magic", "pad", "--file", str(f))
    assert code == 0 and json.loads(out)["n"] == 12


def test_injection_and_search(capsys):
    code, out, _ = run(capsys, "magic", "injection", "--n", "20")
    assert code == 0 and json.loads(out)["mode"] == "injection"
    a = run(capsys, "magic", "search", "--n", "5", "--threads", "1")
    b = run(capsys, "magic", "search", "--n", "5", "--threads", "3")
    assert a == b and json.loads(a[1])["value"] == 10


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "mrose", "--t", "2", "--json")
    assert code == 0 and json.loads(out)["cardinality"] == 17
    code, out, _ = run(capsys, "construct", "bose-chowla", "--p", "7")
    assert code == 0 and len(json.loads(out)) == 7


def test_construct_seeded_is_deterministic(capsys):
    args = ("construct", "quasi-sidon-reflect", "--n", "3000", "--c", "sqrt(2)",
            "--trials", "5", "--seed", "11", "--json")
    assert run(capsys, *args) == run(capsys, *args)


def test_real_expressions(capsys):
    code, out, _ = run(capsys, "construct", "diff-aps", "--n", "2000", "--c", "5/3", "--json")
    assert code == 0 and json.loads(out)["params"]["c"] == pytest.approx(5 / 3)


@pytest.mark.parametrize("argv", [
    ("construct", "bose-chowla", "--p", "4"),
    ("construct", "mrose", "--t", "0"),
    ("construct", "quasi-sidon-reflect", "--n", "100", "--c", "3"),
    ("extremal", "s", "--k", "9", "--n", "5"),
    ("extremal", "table", "--max-n", "40"),
    ("magic", "search", "--n", "12"),
    ("magic", "verify", "--file", "/nonexistent/x.json"),
    ("bounds", "curve", "--which", "s-lower", "--min", "2", "--max", "1", "--step", "0.1"),
    ("bounds", "fourier", "--x", "__import__('os')"),
    ("nonsense",),
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_infeasible_exit(capsys):
    code, out, err = run(capsys, "construct", "quasi-sidon-aps", "--n", "9", "--c", "0.5")
    assert code == 3 and out == "" and "infeasible" in err


def test_extremal_commands(capsys):
    code, out, _ = run(capsys, "extremal", "s", "--k", "3", "--n", "5")
    assert code == 0 and out.splitlines()[1].startswith("3,5,6,1;2;4,")
    code, out, _ = run(capsys, "extremal", "table", "--max-n", "4", "--kind", "d")
    assert code == 0 and len(out.splitlines()) == 11
    code, out, _ = run(capsys, "extremal", "discrepancy", "--p", "31", "--m", "2")
    assert code == 0 and json.loads(out)["normalized_error"] <= 0.5


def test_extremal_threads_identical(capsys):
    a = run(capsys, "extremal", "table", "--max-n", "12", "--threads", "1")
    b = run(capsys, "extremal", "table", "--max-n", "12", "--threads", "4")
    assert a == b


def test_bounds_commands(capsys):
    code, out, _ = run(capsys, "bounds", "constants")
    assert code == 0 and json.loads(out)["b_sup_upper"].startswith("0.4898")
    code, out, _ = run(capsys, "bounds", "curve", "--which", "s-lower",
                       "--min", "0.5", "--max", "3", "--step", "0.01")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "c,y,formula_id" and len(lines) == 252
    code, out, _ = run(capsys, "bounds", "fourier", "--x", "3*pi/2")
    assert code == 0 and json.loads(out)["error"] <= 0.02


@pytest.mark.parametrize("argv", [
    (), ("construct",), ("construct", "diff-aps"), ("magic",), ("magic", "verify"),
    ("extremal",), ("extremal", "table"), ("bounds",), ("bounds", "curve"),
])
def test_help_everywhere(capsys, argv):
    code, out, _ = run(capsys, *argv, "--help")
    assert code == 0 and "usage:" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "magicbases", "bounds", "fourier", "--x", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["target"] == 1.0
