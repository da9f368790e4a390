import json
import subprocess
import sys

import pytest

from crystab.cli import CSV_COLUMNS, main


def run(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    out = capsys.readouterr()
    return info.value.code, out.out, out.err


CENTRE = ["classify", "--p", "5", "--n", "2", "--k", "11", "--a", "sqrt(Z-1)"]


def test_classify_json(capsys):
    code, out, _ = run(CENTRE + ["--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["slope"] == "1/2" and rep["nu"] == 1 and rep["region"]["member"]
    assert rep["galois"]["kind"] == "reducible" and rep["galois"]["mu"] == "0"
    assert rep["banach"]["kind"] == "BRed"
    code2, out2, _ = run(CENTRE + ["--json"], capsys)
    assert out2 == out


def test_classify_text(capsys):
    code, out, _ = run(CENTRE, capsys)
    assert code == 0 and "galois:" in out and "banach:" in out


def test_precision_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("CRYSTAB_PRECISION", "12")
    _, out, _ = run(CENTRE + ["--json"], capsys)
    assert json.loads(out)["input"]["precision"] == 12
    _, out, _ = run(CENTRE + ["--json", "--precision", "20"], capsys)
    assert json.loads(out)["input"]["precision"] == 20


def test_domain_error_exit(capsys):
    code, out, _ = run(["classify", "--p", "5", "--k", "4", "--a", "p", "--json"], capsys)
    assert code == 2
    assert json.loads(out)["error"]["message"] == "slope is an integer"


def test_parse_error_exit(capsys):
    code, _, err = run(["classify", "--p", "5", "--k", "4", "--a", "sqrt(Z-"], capsys)
    assert code == 1 and "^" in err


def test_usage_error_exit(capsys):
    code, _, _ = run(["classify", "--p", "5"], capsys)
    assert code == 1


def test_region(capsys):
    code, out, _ = run(["region", "--p", "5", "--a", "sqrt(Z-1)", "--json"], capsys)
    assert code == 0
    assert json.loads(out)["regions"] == [{"alpha": 1, "member": True},
                                          {"alpha": 2, "member": False}]


def test_table_csv(capsys):
    code, out, _ = run(["table", "--p", "5"], capsys)
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == ",".join(CSV_COLUMNS) and len(lines) == 9
    reducible = [ln for ln in lines[1:] if "mu_lam" in ln]
    assert len(reducible) == 2


def test_table_parallel_matches_serial(capsys):
    _, serial, _ = run(["table", "--p", "5", "--format", "json"], capsys)
    _, par, _ = run(["table", "--p", "5", "--format", "json", "--jobs", "2"], capsys)
    assert serial == par


def test_table_empty_slopes(capsys):
    code, out, _ = run(["table", "--p", "5", "--slopes", ""], capsys)
    assert code == 0 and out.strip() == ",".join(CSV_COLUMNS)


def test_verify_single_suite(capsys):
    code, out, _ = run(["verify", "--suite", "vandermonde"], capsys)
    assert code == 0 and out.strip().endswith("0 failed")


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "crystab", "--help"], capture_output=True,
                          text=True)
    assert proc.returncode == 0 and "classify" in proc.stdout
