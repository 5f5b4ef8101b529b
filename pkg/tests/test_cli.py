"""Command-line front end: exit codes, round trips, determinism."""

import json
import subprocess
import sys

import pytest

CLI = (sys.executable, "-m", "tropsolve.cli")


def run(*args):
    return subprocess.run([*CLI, *args], capture_output=True, text=True)


@pytest.fixture()
def cheb_file(tmp_path):
    path = tmp_path / "cheb.json"
    path.write_text(json.dumps({
        "semifield": "max-plus", "kind": "cheb_box",
        "p": [4], "q": [0], "g": [1], "h": [3]}))
    return path


def test_solve_exit_codes(tmp_path, cheb_file):
    ok = run("solve", str(cheb_file))
    assert ok.returncode == 0
    assert "optimum: 2" in ok.stdout

    infeasible = tmp_path / "hot.json"
    infeasible.write_text(json.dumps({
        "kind": "cheb_kleene", "B": [[1]], "p": [4], "q": [0]}))
    r = run("solve", str(infeasible), "--json")
    assert r.returncode == 2
    assert json.loads(r.stdout)["reason"] == "NO_REGULAR_SOLUTION"

    malformed = tmp_path / "bad.json"
    malformed.write_text(json.dumps({
        "kind": "rayleigh", "A": [[1, 2], [3]]}))
    r = run("solve", str(malformed))
    assert r.returncode == 1
    assert "A[1]" in r.stderr

    r = run("solve", str(tmp_path / "missing.json"))
    assert r.returncode == 1


def test_solve_json_report(cheb_file):
    r = run("solve", str(cheb_file), "--json")
    assert r.returncode == 0
    blob = json.loads(r.stdout)
    assert blob["schema"] == "tropsolve.report/1"
    assert blob["optimum"] == 2


def test_verify_pass_and_determinism(tmp_path):
    gen = run("gen", "rayleigh_box", "-n", "2", "--seed", "5",
              "-o", str(tmp_path / "inst.json"))
    assert gen.returncode == 0
    a = run("verify", str(tmp_path / "inst.json"), "--json", "--seed", "9")
    b = run("verify", str(tmp_path / "inst.json"), "--json", "--seed", "9")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    blob = json.loads(a.stdout)
    assert blob["passed"] is True and blob["gap"] == 0


def test_verify_coarse_step_still_sound(tmp_path):
    # a coarser lattice can only keep or worsen the grid optimum, never
    # beat the solver; verification reports the gap and fails loudly
    gen = run("gen", "new_boxed_spectral", "-n", "2", "--seed", "4",
              "-o", str(tmp_path / "inst.json"))
    assert gen.returncode == 0
    r = run("verify", str(tmp_path / "inst.json"), "--json", "--step", "2")
    blob = json.loads(r.stdout)
    assert not blob["grid_beats_solver"]
    if not blob["passed"]:
        assert r.returncode == 2


def test_gen_round_trip_and_determinism(tmp_path):
    a = run("gen", "cheb_kleene_box", "-n", "3", "--seed", "11")
    b = run("gen", "cheb_kleene_box", "-n", "3", "--seed", "11")
    assert a.returncode == 0 and a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["kind"] == "cheb_kleene_box" and doc["semifield"] == "max-plus"

    path = tmp_path / "roundtrip.json"
    path.write_text(a.stdout)
    solved = run("solve", str(path))
    assert solved.returncode == 0


def test_gen_box_ordering():
    r = run("gen", "cheb_box", "-n", "4", "--seed", "2", )
    doc = json.loads(r.stdout)
    lows, highs = doc["g"], doc["h"]
    for lo, hi in zip(lows, highs):
        if lo is not None:
            assert hi is not None and hi >= lo


def test_solve_precondition_error_is_input_error(tmp_path):
    # a structurally bad instance (q not regular) is an input error, not
    # an infeasibility
    path = tmp_path / "badq.json"
    path.write_text(json.dumps({
        "kind": "cheb_box", "p": [4], "q": [None], "g": [1], "h": [3]}))
    r = run("solve", str(path))
    assert r.returncode == 1
    assert "q regular" in r.stderr


def test_verify_grid_cap_exit(tmp_path):
    path = tmp_path / "cap.json"
    path.write_text(json.dumps({
        "kind": "rayleigh_box", "A": [[1, 2], [3, 4]],
        "g": [0, 0], "h": [2, 2],
        "grid": {"step": "1/100000", "cap": 10000}}))
    r = run("verify", str(path))
    assert r.returncode == 3
    assert "cap" in r.stderr


def test_algebra_commands(tmp_path):
    mat = tmp_path / "m.txt"
    mat.write_text("1 2\n3 4\n")
    r = run("algebra", "spectral", str(mat))
    assert r.returncode == 0 and r.stdout.strip() == "4"

    zero = tmp_path / "z.txt"
    zero.write_text(". .\n. .\n")
    r = run("algebra", "star", str(zero))
    assert r.returncode == 0
    assert r.stdout.splitlines()[:2] == ["0  .", ".  0"]
    assert "closure_valid: yes" in r.stdout

    eye = tmp_path / "i.txt"
    eye.write_text("0 .\n. 0\n")
    r = run("algebra", "tr", str(eye))
    assert r.returncode == 0 and r.stdout.splitlines()[0] == "0"

    ragged = tmp_path / "r.txt"
    ragged.write_text("1 2\n3\n")
    assert run("algebra", "star", str(ragged)).returncode == 1

    rect = tmp_path / "rect.txt"
    rect.write_text("1 2 3\n4 5 6\n")
    assert run("algebra", "spectral", str(rect)).returncode == 1
