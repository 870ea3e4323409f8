import math

import numpy as np
import pytest

from hgp_robust import gf2
from hgp_robust.codes import (
    INFINITE,
    ClassicalCode,
    CodeParams,
    classical_params,
    generate,
    parse_alist,
    parse_code_text,
    parse_dense,
    transpose_code,
    write_alist,
    write_dense,
)
from hgp_robust.errors import GenerationFailed, InvalidFamilyParams, KernelTooLarge, MalformedAlist, MalformedMatrix

import oracles

CHAIN3_ALIST = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n"


@pytest.mark.parametrize(
    "h, expected",
    [
        ([[1, 1, 0], [0, 1, 1]], (3, 1, 3)),
        ([[1, 1, 0], [0, 1, 1], [1, 0, 1]], (3, 1, 3)),
        (np.eye(2), (2, 0, INFINITE)),
    ],
)
def test_classical_params_examples(h, expected):
    assert classical_params(ClassicalCode(h)).as_tuple() == expected


def test_transpose_examples():
    assert classical_params(transpose_code(generate("repetition_chain", 3))).as_tuple() == (2, 0, INFINITE)
    assert classical_params(transpose_code(generate("repetition_cyclic", 3))).as_tuple() == (3, 1, 3)
    assert classical_params(transpose_code(ClassicalCode(np.eye(4)))).as_tuple() == (4, 0, INFINITE)


@pytest.mark.parametrize("n", range(2, 9))
def test_repetition_families(n):
    chain, cyclic = generate("repetition_chain", n), generate("repetition_cyclic", n)
    assert classical_params(chain) == CodeParams(n, 1, n)
    assert classical_params(transpose_code(chain)) == CodeParams(n - 1, 0, INFINITE)
    assert classical_params(cyclic) == CodeParams(n, 1, n)
    assert classical_params(transpose_code(cyclic)) == CodeParams(n, 1, n)


def test_generate_definitions():
    assert generate("repetition_chain", 3).h.tolist() == [[1, 1, 0], [0, 1, 1]]
    assert {tuple(r) for r in generate("repetition_cyclic", 3).h.tolist()} == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_random_ldpc_deterministic_and_regular():
    a = generate("random_ldpc", 4, 3, 2, seed=7)
    assert a == generate("random_ldpc", 4, 3, 2, seed=7)
    assert (a.h.sum(axis=0) == 2).all() and a.h.any(axis=1).all()
    rng = np.random.default_rng(0)
    for seed in rng.integers(2**31, size=30):
        c = generate("random_ldpc", 6, 4, 3, seed=int(seed))
        assert (c.h.sum(axis=0) == 3).all() and c.h.any(axis=1).all()


def test_generate_errors():
    with pytest.raises(InvalidFamilyParams):
        generate("random_ldpc", 4, 2, 3, seed=0)
    with pytest.raises(InvalidFamilyParams):
        generate("repetition_chain", 4, r=2)
    with pytest.raises(InvalidFamilyParams):
        generate("hamming", 4)
    with pytest.raises(GenerationFailed):
        # three columns of weight one cannot touch four rows
        generate("random_ldpc", 3, 4, 1, seed=0, max_draws=20)


def test_params_match_enumeration():
    rng = np.random.default_rng(99)
    for _ in range(60):
        h = (rng.random(rng.integers(1, 5, size=2)) < 0.5).astype(np.uint8)
        c = ClassicalCode(h)
        p = classical_params(c)
        assert p.k == len(oracles.kernel(h)).bit_length() - 1
        assert p.d == oracles.classical_distance(h)
        assert classical_params(transpose_code(transpose_code(c))) == p


def test_kernel_too_large():
    with pytest.raises(KernelTooLarge):
        classical_params(ClassicalCode(np.zeros((1, 10))), brute_limit=5)


def test_parse_alist_examples():
    assert parse_alist(CHAIN3_ALIST).h.tolist() == [[1, 1, 0], [0, 1, 1]]
    assert parse_alist("1 1\n1 1\n1\n1\n1\n1\n").h.tolist() == [[1]]
    assert write_alist(generate("repetition_chain", 3)) == CHAIN3_ALIST


@pytest.mark.parametrize(
    "text",
    [
        # column 1 claims degree 3 but lists only 2 checks
        "3 2\n3 2\n3 2 1\n2 2\n1 2 0\n1 2 0\n2 0 0\n1 2\n2 3\n",
        "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2\n",  # too few tokens
        "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 x\n2 0\n1 2\n2 3\n",  # non-numeric
        "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 5\n2 0\n1 2\n2 3\n",  # index out of range
        "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 3\n2 3\n",  # rows disagree with columns
        "3 2\n2 2\n1 2 1\n2 2\n1 2\n1 2\n2 0\n1 2\n2 3\n",  # nonzero padding
    ],
)
def test_parse_alist_rejects(text):
    with pytest.raises(MalformedAlist):
        parse_alist(text)


def test_alist_roundtrip_random():
    rng = np.random.default_rng(2024)
    for i in range(100):
        rows, cols = rng.integers(1, 9, size=2)
        h = (rng.random((rows, cols)) < rng.uniform(0.1, 0.8)).astype(np.uint8)
        c = ClassicalCode(h)
        assert parse_alist(write_alist(c)) == c
        assert ClassicalCode(parse_dense(write_dense(h))) == c


def test_dense_format():
    assert parse_dense("110\n011\n").tolist() == [[1, 1, 0], [0, 1, 1]]
    for bad in ["", "110\n01\n", "120\n"]:
        with pytest.raises(MalformedMatrix):
            parse_dense(bad)


def test_sniffing():
    assert parse_code_text(CHAIN3_ALIST) == parse_code_text("110\n011\n")
    assert parse_code_text("1\n").h.tolist() == [[1]]


def test_fixtures_roundtrip(fixtures_dir):
    for name in ("rep3_chain.alist", "rep3_cyclic.alist"):
        text = (fixtures_dir / name).read_text()
        assert write_alist(parse_alist(text)) == text
    for name in ("rotated_d3_hx.txt", "rotated_d3_hz.txt"):
        text = (fixtures_dir / name).read_text()
        assert write_dense(parse_dense(text)) == text
