"""Classical binary linear codes: parameters, transposes, file formats, generators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from hgp_robust import gf2
from hgp_robust.errors import (
    GenerationFailed,
    InvalidFamilyParams,
    KernelTooLarge,
    MalformedAlist,
    MalformedMatrix,
)

INFINITE = math.inf
DEFAULT_BRUTE_LIMIT = 24

Family = Literal["repetition_chain", "repetition_cyclic", "random_ldpc"]
FAMILIES: tuple[str, ...] = ("repetition_chain", "repetition_cyclic", "random_ldpc")


@dataclass(frozen=True, eq=False)
class ClassicalCode:
    """A classical code given by its parity-check matrix (rows = checks, cols = bits).

    Redundant rows are allowed.
    """

    h: np.ndarray

    def __post_init__(self):
        h = gf2.as_matrix(self.h)
        h.setflags(write=False)
        object.__setattr__(self, "h", h)

    @property
    def n(self) -> int:
        return self.h.shape[1]

    @property
    def r(self) -> int:
        return self.h.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ClassicalCode):
            return NotImplemented
        return self.h.shape == other.h.shape and np.array_equal(self.h, other.h)

    def __hash__(self):
        return hash((self.h.shape, self.h.tobytes()))

    def __repr__(self):
        return f"ClassicalCode(r={self.r}, n={self.n})"


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: float  # int, or INFINITE when k == 0

    def as_tuple(self):
        return (self.n, self.k, self.d)


def min_nonzero_weight(basis: list[np.ndarray], n: int, brute_limit: int = DEFAULT_BRUTE_LIMIT):
    """Minimum weight of a nonzero vector in the span of an independent basis."""
    if not basis:
        return INFINITE
    if len(basis) > brute_limit:
        raise KernelTooLarge(f"kernel dimension {len(basis)} exceeds brute_limit {brute_limit}")
    elements = gf2.span_array([gf2.pack(v) for v in basis], n)
    return int(gf2.popcount_array(elements[1:]).min())


def classical_params(code: ClassicalCode, brute_limit: int = DEFAULT_BRUTE_LIMIT) -> CodeParams:
    basis = gf2.kernel_basis(code.h)
    d = min_nonzero_weight(basis, code.n, brute_limit)
    return CodeParams(code.n, len(basis), d)


def transpose_code(code: ClassicalCode) -> ClassicalCode:
    return ClassicalCode(code.h.T)


# --- generators --------------------------------------------------------------


def repetition_chain(n: int) -> ClassicalCode:
    h = np.zeros((n - 1, n), dtype=np.uint8)
    for i in range(n - 1):
        h[i, i] = h[i, i + 1] = 1
    return ClassicalCode(h)


def repetition_cyclic(n: int) -> ClassicalCode:
    h = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        h[i, i] = h[i, (i + 1) % n] = 1
    return ClassicalCode(h)


def random_ldpc(n: int, r: int, col_weight: int, seed: int, max_draws: int = 1000) -> ClassicalCode:
    """Random check matrix with exactly ``col_weight`` ones per column and no empty row.

    Columns are independent uniform ``col_weight``-subsets of the rows. A
    draw with an all-zero row is thrown away and the next one from the same
    stream is tried, up to ``max_draws`` times.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max_draws):
        h = np.zeros((r, n), dtype=np.uint8)
        for c in range(n):
            h[rng.choice(r, size=col_weight, replace=False), c] = 1
        if h.any(axis=1).all():
            return ClassicalCode(h)
    raise GenerationFailed(
        f"no draw of random_ldpc(n={n}, r={r}, col_weight={col_weight}, seed={seed}) "
        f"without an empty row in {max_draws} tries"
    )


def generate(
    family: Family,
    n: int,
    r: int | None = None,
    col_weight: int | None = None,
    seed: int = 0,
    max_draws: int = 1000,
) -> ClassicalCode:
    if family not in FAMILIES:
        raise InvalidFamilyParams(f"unknown family {family!r}")
    if n < 1:
        raise InvalidFamilyParams("n must be positive")
    if family == "repetition_chain":
        if r is not None and r != n - 1:
            raise InvalidFamilyParams(f"repetition_chain has r = n - 1 = {n - 1}, got r={r}")
        return repetition_chain(n)
    if family == "repetition_cyclic":
        if n < 2:
            raise InvalidFamilyParams("repetition_cyclic needs n >= 2")
        if r is not None and r != n:
            raise InvalidFamilyParams(f"repetition_cyclic has r = n = {n}, got r={r}")
        return repetition_cyclic(n)
    if r is None or col_weight is None:
        raise InvalidFamilyParams("random_ldpc needs r and col_weight")
    if r < 1 or not 1 <= col_weight <= r:
        raise InvalidFamilyParams(f"random_ldpc needs 1 <= col_weight <= r, got col_weight={col_weight}, r={r}")
    return random_ldpc(n, r, col_weight, seed, max_draws)


# --- file formats ------------------------------------------------------------


def _int_token(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedAlist(f"non-numeric token {tok!r}") from None


def parse_alist(text: str) -> ClassicalCode:
    """Parse MacKay's alist format.

    Header ``N M`` (bits, checks), then the two maximum degrees, the N column
    degrees, the M row degrees, N zero-padded adjacency lists of 1-based check
    indices and M zero-padded lists of 1-based bit indices.
    """
    tokens = [_int_token(t) for t in text.split()]
    if len(tokens) < 4:
        raise MalformedAlist("alist header is truncated")
    n, m, max_col, max_row = tokens[:4]
    if min(n, m, max_col, max_row) < 0:
        raise MalformedAlist("negative size in alist header")
    expected = 4 + n + m + n * max_col + m * max_row
    if len(tokens) != expected:
        raise MalformedAlist(f"expected {expected} tokens for a {m}x{n} alist, found {len(tokens)}")

    pos = 4
    col_deg = tokens[pos : pos + n]
    pos += n
    row_deg = tokens[pos : pos + m]
    pos += m
    if any(not 0 <= d <= max_col for d in col_deg) or (n and max(col_deg) != max_col):
        raise MalformedAlist("column degrees disagree with the stated maximum")
    if any(not 0 <= d <= max_row for d in row_deg) or (m and max(row_deg) != max_row):
        raise MalformedAlist("row degrees disagree with the stated maximum")

    def read_lists(count, width, degrees, bound, what):
        nonlocal pos
        out = []
        for i in range(count):
            entries = tokens[pos : pos + width]
            pos += width
            listed, padding = entries[: degrees[i]], entries[degrees[i] :]
            if any(e != 0 for e in padding):
                raise MalformedAlist(f"{what} {i + 1}: degree {degrees[i]} but more entries listed")
            if any(not 1 <= e <= bound for e in listed):
                raise MalformedAlist(f"{what} {i + 1}: index out of range or missing entry")
            if len(set(listed)) != len(listed):
                raise MalformedAlist(f"{what} {i + 1}: repeated index")
            out.append(listed)
        return out

    col_lists = read_lists(n, max_col, col_deg, m, "column")
    row_lists = read_lists(m, max_row, row_deg, n, "row")

    h = np.zeros((m, n), dtype=np.uint8)
    for bit, checks in enumerate(col_lists):
        for c in checks:
            h[c - 1, bit] = 1
    from_rows = np.zeros((m, n), dtype=np.uint8)
    for check, bits in enumerate(row_lists):
        for b in bits:
            from_rows[check, b - 1] = 1
    if not np.array_equal(h, from_rows):
        raise MalformedAlist("column and row adjacency lists describe different matrices")
    return ClassicalCode(h)


def write_alist(code: ClassicalCode) -> str:
    h = code.h
    m, n = h.shape
    col_deg = h.sum(axis=0).astype(int).tolist() if m else [0] * n
    row_deg = h.sum(axis=1).astype(int).tolist() if n else [0] * m
    max_col = max(col_deg, default=0)
    max_row = max(row_deg, default=0)

    def padded(indices, width):
        return " ".join([str(i + 1) for i in indices] + ["0"] * (width - len(indices)))

    lines = [f"{n} {m}", f"{max_col} {max_row}", " ".join(map(str, col_deg)), " ".join(map(str, row_deg))]
    lines += [padded(np.flatnonzero(h[:, j]).tolist(), max_col) for j in range(n)]
    lines += [padded(np.flatnonzero(h[i]).tolist(), max_row) for i in range(m)]
    return "\n".join(lines) + "\n"


def parse_dense(text: str) -> np.ndarray:
    """Parse rows of '0'/'1' characters into a matrix."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedMatrix("dense matrix has no rows")
    width = len(lines[0])
    for i, ln in enumerate(lines):
        if len(ln) != width:
            raise MalformedMatrix(f"row {i} has length {len(ln)}, expected {width}")
        if set(ln) - {"0", "1"}:
            raise MalformedMatrix(f"row {i} contains characters other than 0/1")
    return np.array([[int(ch) for ch in ln] for ln in lines], dtype=np.uint8)


def write_dense(h) -> str:
    h = gf2.as_matrix(h)
    return "".join("".join(str(int(b)) for b in row) + "\n" for row in h)


def parse_code_text(text: str) -> ClassicalCode:
    """Sniff the format from the first line: two integers means alist, else dense."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) >= 2:
        return parse_alist(text)
    return ClassicalCode(parse_dense(text))
