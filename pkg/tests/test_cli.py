import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "yolk2d.cli"]


def run_cli(*args, **kw):
    return subprocess.run(CLI + list(args), capture_output=True, text=True, **kw)


def test_gen_round_trip(tmp_path):
    out = tmp_path / "pts.csv"
    r = run_cli("gen", "--gen", "uniform", "--n", "12", "--seed", "5",
                "--out", str(out))
    assert r.returncode == 0
    text = out.read_text()
    assert text.splitlines()[0].startswith("# generator=uniform")
    # stdout variant is byte-identical to the file
    r2 = run_cli("gen", "--gen", "uniform", "--n", "12", "--seed", "5")
    assert r2.stdout == text

    solve = run_cli("solve", "--metric", "l1", "--input", str(out), "--tol", "1e-4")
    assert solve.returncode == 0
    payload = json.loads(solve.stdout)
    assert payload["n"] == 12


def test_solve_json_fields_and_determinism(tmp_path):
    args = ("solve", "--metric", "l1", "--gen", "uniform", "--n", "8",
            "--seed", "3", "--tol", "1e-4")
    r1, r2 = run_cli(*args), run_cli(*args)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout  # byte-identical
    payload = json.loads(r1.stdout)
    assert list(payload) == [
        "metric", "center", "radius", "k_used", "epsilon", "tolerance", "n",
        "decisions_evaluated",
    ]
    assert payload["metric"] == "l1"
    assert payload["k_used"] == 4
    assert payload["epsilon"] is None
    assert len(payload["center"]) == 2


def test_solve_square_file(tmp_path):
    f = tmp_path / "square.csv"
    f.write_text("# corners\n1,1\n1,-1\n-1,1\n-1,-1\n")
    r = run_cli("solve", "--metric", "l1", "--input", str(f), "--tol", "1e-6")
    payload = json.loads(r.stdout)
    assert abs(payload["radius"] - 1.0) < 1e-4


def test_solve_json_input(tmp_path):
    f = tmp_path / "pts.json"
    f.write_text(json.dumps([[1, 1], [1, -1], [-1, 1], [-1, -1]]))
    r = run_cli("solve", "--metric", "l1", "--input", str(f), "--tol", "1e-4")
    assert r.returncode == 0
    assert json.loads(r.stdout)["n"] == 4


def test_l2_epsilon_choose_k():
    r = run_cli("solve", "--metric", "l2", "--epsilon", "0.5", "--gen", "uniform",
                "--n", "6", "--seed", "1", "--tol", "1e-4")
    assert json.loads(r.stdout)["k_used"] == 10


def test_csv_row_output():
    r = run_cli("solve", "--metric", "l1", "--gen", "uniform", "--n", "5",
                "--seed", "2", "--tol", "1e-4", "--format", "csv")
    cells = r.stdout.strip().split(",")
    assert len(cells) == 9  # center split into two columns
    assert cells[0] == "l1" and cells[5] == ""  # empty epsilon


def test_exit_codes(tmp_path):
    dup = tmp_path / "dup.csv"
    dup.write_text("0,0\n0,0\n")
    assert run_cli("solve", "--input", str(dup)).returncode == 1

    bad = tmp_path / "bad.csv"
    bad.write_text("0,0\n1,nan\n")
    assert run_cli("solve", "--input", str(bad)).returncode == 1

    empty = tmp_path / "empty.csv"
    empty.write_text("# nothing\n")
    assert run_cli("solve", "--input", str(empty)).returncode == 1

    # invalid flag combinations
    assert run_cli("solve", "--metric", "l2", "--gen", "uniform", "--n", "4").returncode == 2
    assert run_cli("solve", "--metric", "l1", "--epsilon", "0.1",
                   "--gen", "uniform", "--n", "4").returncode == 2
    assert run_cli("solve").returncode == 2  # no input source
    assert run_cli("solve", "--gen", "uniform").returncode == 2  # missing --n


def test_check_small_instance():
    r = run_cli("check", "--metric", "l1", "--gen", "uniform", "--n", "9",
                "--seed", "4", "--tol", "1e-6")
    assert r.returncode == 0, r.stdout + r.stderr
    payload = json.loads(r.stdout)
    assert payload["passed"] is True
    assert abs(payload["gap"]) <= payload["slack"]


def test_oracle_command():
    r = run_cli("oracle", "--metric", "l2", "--gen", "uniform", "--n", "7",
                "--seed", "8")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["radius"] > 0
    assert payload["limiting_lines"] >= 1


def test_svg_rendering(tmp_path):
    fig = tmp_path / "out.svg"
    r = run_cli("solve", "--metric", "l1", "--gen", "uniform", "--n", "10",
                "--seed", "6", "--tol", "1e-4", "--svg", str(fig))
    assert r.returncode == 0
    head = fig.read_text()[:500]
    assert "<svg" in head

    png = tmp_path / "out.png"
    r = run_cli("oracle", "--metric", "l2", "--gen", "uniform", "--n", "8",
                "--seed", "6", "--svg", str(png))
    assert r.returncode == 0
    assert png.stat().st_size > 0


def test_bench_small():
    r = run_cli("bench", "--sizes", "100,1000", "--repeats", "2", "--seed", "1")
    assert r.returncode == 0
    rows = [ln.split(",") for ln in r.stdout.strip().splitlines()]
    assert [int(row[0]) for row in rows] == [100, 1000]
    assert all(float(row[1]) >= 0 for row in rows)

    r = run_cli("bench", "--sizes", "100", "--repeats", "1", "--format", "json")
    payload = json.loads(r.stdout)
    assert payload["rows"][0][0] == 100


def test_gen_parses_back_identically(tmp_path):
    out = tmp_path / "g.csv"
    run_cli("gen", "--gen", "gaussian", "--n", "20", "--seed", "9", "--out", str(out))
    import numpy as np

    from yolk2d.generators import generate_points

    rows = []
    for line in out.read_text().splitlines():
        if line.startswith("#"):
            continue
        a, b = line.split(",")
        rows.append((float(a), float(b)))
    assert np.array_equal(np.array(rows), generate_points("gaussian", 20, 9))
