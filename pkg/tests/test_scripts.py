import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, check=True)


def test_run_sweep_small():
    proc = _run("run_sweep.py", "--count", "5", "--schedules", "2")
    rows = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(rows) == 5 and all(r["logicals_ok"] for r in rows)


def test_negative_control():
    (row,) = [json.loads(line) for line in _run("negative_control.py", "3").stdout.splitlines()]
    assert row["d"] == 3 and row["sectors"]["Z"]["effective_d"] == 2
