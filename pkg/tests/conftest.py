import sys
from pathlib import Path

import numpy as np
import pytest

from hgp_robust.codes import ClassicalCode, parse_dense, repetition_chain, repetition_cyclic
from hgp_robust.distance import CssPair
from hgp_robust.hgp import build_hgp

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def surface():
    return build_hgp(repetition_chain(3), repetition_chain(3))


@pytest.fixture(scope="session")
def toric():
    return build_hgp(repetition_cyclic(3), repetition_cyclic(3))


@pytest.fixture(scope="session")
def rotated():
    hx = parse_dense((FIXTURES / "rotated_d3_hx.txt").read_text())
    hz = parse_dense((FIXTURES / "rotated_d3_hz.txt").read_text())
    return CssPair(hx, hz)


@pytest.fixture(scope="session")
def trivial():
    eye = ClassicalCode(np.eye(2, dtype=np.uint8))
    return build_hgp(eye, eye)


def random_matrix(rng, rows, cols, density=0.5):
    return (rng.random((rows, cols)) < density).astype(np.uint8)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for mod in list(sys.modules.values()):
        lines.extend(getattr(mod, "ACCEPTANCE_LINES", ()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
