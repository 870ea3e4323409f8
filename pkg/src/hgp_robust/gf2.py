"""Dense linear algebra over GF(2).

Matrices and vectors are numpy ``uint8`` arrays holding 0/1 entries. The
search-heavy code elsewhere packs vectors into Python ints (bit ``i`` is
coordinate ``i``); the helpers for that live at the bottom of this module.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

BitMatrix = npt.NDArray[np.uint8]
BitVector = npt.NDArray[np.uint8]


def as_matrix(m, cols: int | None = None) -> BitMatrix:
    """Coerce ``m`` to a 2-D uint8 array reduced mod 2.

    ``cols`` is only needed to give an empty list of rows a width.
    """
    a = np.asarray(m)
    if a.size == 0 and a.ndim < 2:
        return np.zeros((0, cols or 0), dtype=np.uint8)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return (a.astype(np.int64) & 1).astype(np.uint8)


def as_vector(v) -> BitVector:
    a = np.asarray(v)
    if a.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {a.shape}")
    return (a.astype(np.int64) & 1).astype(np.uint8)


def mul(a, b) -> npt.NDArray[np.uint8]:
    """Matrix (or matrix-vector) product mod 2."""
    return ((np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) & 1).astype(np.uint8)


def kron(a, b) -> npt.NDArray[np.uint8]:
    """Kronecker product; ``(u (x) v)[i*len(v) + j] = u[i] * v[j]``."""
    return np.kron(np.asarray(a, dtype=np.uint8), np.asarray(b, dtype=np.uint8)).astype(np.uint8)


def identity(n: int) -> BitMatrix:
    return np.eye(n, dtype=np.uint8)


def unit(n: int, i: int) -> BitVector:
    e = np.zeros(n, dtype=np.uint8)
    e[i] = 1
    return e


def weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def rref(m) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    a = as_matrix(m).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.flatnonzero(a[r:, c])
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] ^= a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m) -> list[BitVector]:
    """Free-variable basis of ``ker(m)``.

    One vector per non-pivot column ``f`` of ``rref(m)``: a 1 at ``f``, 0 at
    every other non-pivot column, pivot entries back-solved. This convention
    is relied on by the logical-operator construction.
    """
    a, pivots = rref(m)
    cols = a.shape[1]
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.uint8)
        v[f] = 1
        for row, p in enumerate(pivots):
            v[p] = a[row, f]
        basis.append(v)
    return basis


def non_pivot_columns(m) -> list[int]:
    _, pivots = rref(m)
    pivot_set = set(pivots)
    return [c for c in range(as_matrix(m).shape[1]) if c not in pivot_set]


def solve_in_image(m, v) -> BitVector | None:
    """Return some ``x`` with ``m @ x = v`` (mod 2), or None if ``v`` is not in the column space."""
    a = as_matrix(m)
    v = as_vector(v)
    rows, cols = a.shape
    if v.shape[0] != rows:
        raise ValueError(f"vector length {v.shape[0]} does not match {rows} rows")
    aug, pivots = rref(np.hstack([a, v[:, None]]))
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for row, p in enumerate(pivots):
        x[p] = aug[row, cols]
    return x


def in_rowspace(m, v) -> bool:
    return solve_in_image(as_matrix(m).T, v) is not None


# --- packed (int) representation -------------------------------------------


def pack(v) -> int:
    """Pack a 0/1 vector into an int with bit ``i`` equal to ``v[i]``."""
    out = 0
    for i in np.flatnonzero(np.asarray(v)):
        out |= 1 << int(i)
    return out


def pack_rows(m) -> list[int]:
    return [pack(row) for row in as_matrix(m)]


def unpack(x: int, n: int) -> BitVector:
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.uint8)


def support(x: int) -> list[int]:
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def parity(x: int) -> int:
    return bin(x).count("1") & 1


class RowspaceReducer:
    """Canonical coset representatives for ``F_2^n / rowspace(m)``.

    ``reduce(v)`` clears every pivot coordinate of ``rref(m)``, so two vectors
    reduce to the same int iff they differ by an element of the row space.
    The map is linear.
    """

    def __init__(self, m):
        a, pivots = rref(m)
        self.rows = [(p, pack(a[i])) for i, p in enumerate(pivots)]

    def reduce(self, v: int) -> int:
        for p, row in self.rows:
            if (v >> p) & 1:
                v ^= row
        return v

    def reduce_array(self, values: np.ndarray) -> np.ndarray:
        if values.dtype == object:
            return np.array([self.reduce(int(x)) for x in values], dtype=object)
        values = values.copy()
        one = values.dtype.type(1)
        for p, row in self.rows:
            hit = (values >> values.dtype.type(p)) & one
            values ^= hit * values.dtype.type(row)
        return values


def span_array(vectors: Sequence[int], n: int) -> np.ndarray:
    """All ``2**len(vectors)`` elements of the span, as packed ints.

    Uses uint64 when ``n <= 64`` and object arrays otherwise.
    """
    dtype = np.uint64 if n <= 64 else object
    out = np.zeros(1, dtype=dtype)
    for v in vectors:
        out = np.concatenate([out, out ^ (np.uint64(v) if dtype is np.uint64 else v)])
    return out


def popcount_array(values: np.ndarray) -> np.ndarray:
    if values.dtype == np.uint64:
        return np.bitwise_count(values).astype(np.int64)
    return np.array([bin(int(x)).count("1") for x in values], dtype=np.int64)


def stack(vectors: Iterable, cols: int) -> BitMatrix:
    vectors = list(vectors)
    if not vectors:
        return np.zeros((0, cols), dtype=np.uint8)
    return np.vstack([as_vector(v) for v in vectors])
