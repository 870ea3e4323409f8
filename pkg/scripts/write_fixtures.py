#!/usr/bin/env python3
"""Regenerate the files in fixtures/ from the library."""

import io
from pathlib import Path

from hgp_robust.cli import run
from hgp_robust.codes import repetition_chain, repetition_cyclic, write_alist, write_dense
from hgp_robust.controls import rotated_surface_code

ROOT = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    ROOT.mkdir(exist_ok=True)
    (ROOT / "rep3_chain.alist").write_text(write_alist(repetition_chain(3)))
    (ROOT / "rep3_cyclic.alist").write_text(write_alist(repetition_cyclic(3)))
    rot = rotated_surface_code(3)
    (ROOT / "rotated_d3_hx.txt").write_text(write_dense(rot.hx))
    (ROOT / "rotated_d3_hz.txt").write_text(write_dense(rot.hz))
    for name, alist in (("surface_d3.json", "rep3_chain.alist"), ("toric_d3.json", "rep3_cyclic.alist")):
        src = str(ROOT / alist)
        code = run(["build", "--h1", src, "--h2", src, "--out", str(ROOT / name)], stdout=io.StringIO())
        assert code == 0, name


if __name__ == "__main__":
    main()
