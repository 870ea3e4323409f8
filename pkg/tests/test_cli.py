import io
import json
import subprocess
import sys

import numpy as np
import pytest

from hgp_robust.cli import run
from hgp_robust.codes import parse_code_text


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def doc(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


@pytest.fixture
def fx(fixtures_dir):
    return lambda name: str(fixtures_dir / name)


def test_build_then_params(tmp_path, fx):
    out = tmp_path / "code.json"
    code, built = doc("build", "--h1", fx("rep3_chain.alist"), "--h2", fx("rep3_chain.alist"), "--out", str(out))
    assert code == 0 and built["params"] == {"n": 13, "k": 1, "d": 3}
    assert json.loads(out.read_text()) == built
    for mode in ("formula", "brute", "both"):
        assert doc("params", "--code", str(out), "--mode", mode) == (0, {"n": 13, "k": 1, "d": 3})


def test_build_matches_fixtures(fx, fixtures_dir):
    _, built = doc("build", "--h1", fx("rep3_chain.alist"), "--h2", fx("rep3_chain.alist"))
    assert built == json.loads((fixtures_dir / "surface_d3.json").read_text())
    _, built = doc("build", "--h1", fx("rep3_cyclic.alist"), "--h2", fx("rep3_cyclic.alist"))
    assert built == json.loads((fixtures_dir / "toric_d3.json").read_text())
    assert built["params"] == {"n": 18, "k": 2, "d": 3}


def test_robust_surface(fx):
    code, rep = doc("check-robustness", "--code", fx("surface_d3.json"), "--mode", "adversarial")
    assert code == 0 and rep["verdict"] == "ROBUST"


def test_reduced_rotated(fx):
    code, rep = doc("check-robustness", "--hx", fx("rotated_d3_hx.txt"), "--hz", fx("rotated_d3_hz.txt"), "--mode", "adversarial")
    assert code == 2 and rep["verdict"] == "REDUCED"
    assert rep["d"] == 3
    assert min(s["effective_d"] for s in rep["sectors"].values()) == 2


def test_undefined_exits_zero(tmp_path):
    eye = tmp_path / "eye.txt"
    eye.write_text("10\n01\n")
    code, rep = doc("check-robustness", "--h1", str(eye), "--h2", str(eye))
    assert code == 0 and rep["verdict"] == "UNDEFINED" and rep["d"] == "inf"


@pytest.mark.parametrize(
    "argv",
    [
        ("params", "--code", "/nonexistent.json"),
        ("build", "--h1", "/nonexistent.alist", "--h2", "/nonexistent.alist"),
        ("params",),
        ("params", "--code", "x", "--bogus"),
        ("nosuchcommand",),
        ("check-robustness", "--hx", "/nonexistent"),
    ],
)
def test_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert "error" in json.loads(out)
    assert err


def test_malformed_file(tmp_path):
    bad = tmp_path / "bad.alist"
    bad.write_text("3 2\n2 2\n1 2 1\n")
    code, d = doc("build", "--h1", str(bad), "--h2", str(bad))
    assert code == 1 and d["type"] == "MalformedAlist"


def test_noncommuting_css(tmp_path):
    (tmp_path / "hx.txt").write_text("110\n")
    (tmp_path / "hz.txt").write_text("100\n")
    code, d = doc("check-robustness", "--hx", str(tmp_path / "hx.txt"), "--hz", str(tmp_path / "hz.txt"))
    assert code == 1 and "error" in d


def test_budget_is_hard_error(fx):
    code, d = doc("effective-distance", "--code", fx("toric_d3.json"), "--budget", "50")
    assert code == 1 and d["type"] == "SearchBudgetExceeded"


def test_brute_limit_is_hard_error(fx):
    code, d = doc("params", "--code", fx("toric_d3.json"), "--mode", "brute", "--brute-limit", "3")
    assert code == 1 and d["type"] == "KernelTooLarge"


def test_logicals(fx):
    code, d = doc("logicals", "--code", fx("toric_d3.json"))
    assert code == 0 and d["k"] == 2
    assert all(d["verification"].values())
    assert [op["class"] for op in d["z"]] == ["bit_type", "check_type"]


def test_schedule_roundtrip(tmp_path, fx):
    out = tmp_path / "sched.json"
    code, d = doc("schedule", "--code", fx("toric_d3.json"), "--order", "colored", "--sector", "z", "--out", str(out))
    assert code == 0 and d["depth"] == 4
    code, rep = doc("effective-distance", "--code", fx("toric_d3.json"), "--schedule", str(out), "--mode", "circuit", "--sector", "z")
    assert code == 0 and rep["sectors"]["Z"]["effective_d"] == 3


def test_schedule_both_sectors(fx):
    code, d = doc("schedule", "--hx", fx("rotated_d3_hx.txt"), "--hz", fx("rotated_d3_hz.txt"), "--sector", "both")
    assert code == 0 and set(d) == {"Z", "X"}


def test_effective_distance_mode_both(fx):
    code, d = doc("effective-distance", "--hx", fx("rotated_d3_hx.txt"), "--hz", fx("rotated_d3_hz.txt"), "--mode", "both", "--sector", "z")
    z = d["sectors"]["Z"]
    assert code == 0 and z["effective_d"] == 2 and z["mode"] == "adversarial"
    assert [r["mode"] for r in z["runs"]] == ["adversarial", "circuit"]


@pytest.mark.parametrize("fmt", ["alist", "dense"])
def test_gen_writes_parseable_file(tmp_path, fmt):
    out = tmp_path / f"c.{fmt}"
    code, d = doc("gen", "--family", "random_ldpc", "--n", "6", "--r", "4", "--col-weight", "2", "--seed", "3", "--format", fmt, "--out", str(out))
    assert code == 0
    assert np.array_equal(parse_code_text(out.read_text()).h, np.array(d["h"], dtype=np.uint8))


def test_gen_rejects_bad_params():
    code, d = doc("gen", "--family", "random_ldpc", "--n", "4", "--r", "2", "--col-weight", "3")
    assert code == 1 and d["type"] == "InvalidFamilyParams"


@pytest.mark.parametrize(
    "argv",
    [
        ("check-robustness", "--code", "surface_d3.json", "--mode", "both", "--order", "random", "--seed", "7"),
        ("effective-distance", "--hx", "rotated_d3_hx.txt", "--hz", "rotated_d3_hz.txt", "--mode", "both"),
        ("logicals", "--code", "toric_d3.json"),
        ("schedule", "--code", "toric_d3.json", "--order", "random", "--seed", "11", "--sector", "both"),
    ],
)
def test_byte_stable(argv, fixtures_dir):
    argv = [str(fixtures_dir / a) if (fixtures_dir / a).exists() else a for a in argv]
    outputs = {call(*argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_console_entry_point(fx):
    proc = subprocess.run(
        [sys.executable, "-m", "hgp_robust.cli", "params", "--code", fx("surface_d3.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"n": 13, "k": 1, "d": 3}
    assert proc.stderr == ""
