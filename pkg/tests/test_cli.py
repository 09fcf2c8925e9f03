import csv
import json
import math
import re
import subprocess
import sys

import pytest

from elliptic_ising import elliptic
from elliptic_ising.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def values(line):
    return {k: float(v) for k, v in re.findall(r"(\w+)=([-+0-9.e]+)", line)}


def test_ell_point(capsys):
    code, out, _ = run(capsys, "ell", "--u", "0", "--k", "0.5")
    assert code == 0
    v = values(out)
    assert (v["sn"], v["cn"]) == (0.0, 1.0)
    assert v["dn"] == pytest.approx(1.0, abs=1e-15)


def test_ell_quarter_period_at_zero_modulus(capsys):
    code, out, _ = run(capsys, "ell", "--k", "0")
    assert code == 0
    assert values(out)["K"] == pytest.approx(math.pi / 2, abs=1e-16)


def test_ell_grid_matches_library(capsys, tmp_path):
    path = tmp_path / "grid.csv"
    code, _, _ = run(capsys, "ell", "--grid", "u=0:0.1:4,k=0.7", "--out", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 41
    for row in rows:
        t = elliptic.jacobi(float(row["u"]), 0.7)
        assert (float(row["sn"]), float(row["cn"]), float(row["dn"])) == t.as_tuple()


def test_ell_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "ell", "--u", "1", "--k", "1.5")
    assert code == 2
    assert "modulus" in err


def test_verify_bad_config(capsys):
    assert run(capsys, "verify", "ising", "--samples", "0")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "verify", "su2", "--tol", "-1")[0] == 2


def strip_times(text):
    return re.sub(r'"wall_time": [0-9.e-]+', '"wall_time": 0', text)


def test_verify_deterministic_json(capsys):
    code1, out1, _ = run(capsys, "verify", "spherical", "--seed", "7", "--samples", "40")
    code2, out2, _ = run(capsys, "verify", "spherical", "--seed", "7", "--samples", "40")
    assert code1 == code2 == 0
    assert strip_times(out1) == strip_times(out2)
    report = json.loads(out1)
    assert report["schema"] == 1
    assert report["passed"] is True
    check = report["suites"][0]["checks"][0]
    assert set(check) >= {"name", "samples", "residual", "tolerance", "passed", "failures", "wall_time"}


def test_verify_other_seed_changes_samples(capsys):
    _, a, _ = run(capsys, "verify", "elliptic", "--seed", "1", "--samples", "20")
    _, b, _ = run(capsys, "verify", "elliptic", "--seed", "2", "--samples", "20")
    assert strip_times(a) != strip_times(b)


def test_verify_tight_tolerance_fails_with_cases(capsys):
    code, out, _ = run(capsys, "verify", "elliptic", "--samples", "50", "--tol", "1e-30")
    assert code == 1
    report = json.loads(out)
    failing = [c for c in report["suites"][0]["checks"] if not c["passed"]]
    assert failing and all(c["failures"] for c in failing)
    passing = [c for c in report["suites"][0]["checks"] if c["passed"]]
    assert all(not c["failures"] for c in passing)


def test_verify_text_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "su2", "--samples", "20", "--format", "text")
    assert code == 0 and out.strip().endswith("PASS overall (seed=42)")
    code, out, _ = run(capsys, "verify", "su2", "--samples", "20", "--format", "csv")
    rows = list(csv.DictReader(out.strip().split("\n")))
    assert code == 0 and rows and all(r["passed"] == "True" for r in rows)


def test_flow_preset(capsys, tmp_path):
    path = tmp_path / "traj.csv"
    code, out, _ = run(capsys, "flow", "--preset", "elliptic", "--out", str(path))
    assert code == 0
    v = values(out)
    assert v["Q1_drift"] <= 1e-6 and v["Q2_drift"] <= 1e-6
    assert len(path.read_text().strip().split("\n")) == 1002


def test_flow_stationary(capsys):
    code, out, _ = run(capsys, "flow", "--coeffs", "0.25,-0.5,-0.75,1,1", "--x0", "0,0.5,-1",
                       "--t-end", "0.1")
    assert code == 0
    # (x - 0.5)^2 (x + 1)^2 with points on both double roots and at the origin
    assert values(out)["Q1_drift"] == 0.0


def test_flow_collision_writes_partial_file(capsys, tmp_path):
    path = tmp_path / "halt.csv"
    code, _, err = run(capsys, "flow", "--coeffs", "1,0,-1.36,0,0.36", "--x0", "0.2,0.3,0.9",
                       "--out", str(path))
    assert code == 1
    assert "collision" in err
    assert len(path.read_text().strip().split("\n")) > 2


def test_flow_malformed_coefficients(capsys):
    code, _, err = run(capsys, "flow", "--coeffs", "1,0,-2", "--x0", "0,1,-1")
    assert code == 2
    assert "2n-1" in err


def test_other_subcommands(capsys):
    code, out, _ = run(capsys, "sphere", "--u1", "0.5", "--u3", "0.7", "--k", "0.6")
    assert code == 0 and values(out)["sum_rule_residual"] <= 1e-10
    code, out, _ = run(capsys, "ybe", "--u1", "0.4", "--u3", "0.6", "--k", "0.7")
    assert code == 0 and max(values(out).values()) <= 1e-9
    code, out, _ = run(capsys, "ising", "--v1", "0.3", "--v3", "0.5", "--k", "0.6")
    assert code == 0 and values(out)["star_triangle_residual"] <= 1e-9
    code, out, _ = run(capsys, "abel", "--u1", "0.7", "--u2", "0.4", "--k", "0.6")
    assert code == 0 and values(out)["interpolant_residual"] <= 1e-10
    code, out, _ = run(capsys, "abel", "--coeffs", "1,0.3,0.8,-0.2,0.6", "--x0=-0.7,0.3,0.9",
                       "--signs", "1,-1,1")
    assert code == 0 and "Q2=" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "elliptic_ising", "ell", "--u", "1", "--k", "0.5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert values(proc.stdout)["sn"] == pytest.approx(elliptic.jacobi(1.0, 0.5).sn, abs=1e-16)
