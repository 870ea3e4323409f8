"""Hypergraph product codes built from two classical check matrices.

Qubit layout: bit-type qubit ``(i, j)`` sits at column ``i * n2 + j`` and
check-type qubit ``(a, b)`` at ``n1 * n2 + a * r2 + b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from hgp_robust import gf2
from hgp_robust.codes import (
    DEFAULT_BRUTE_LIMIT,
    INFINITE,
    ClassicalCode,
    classical_params,
    transpose_code,
)
from hgp_robust.distance import CssPair, sector_distance
from hgp_robust.errors import FormulaBruteMismatch, VerificationFailed


@dataclass(frozen=True, eq=False)
class HgpCode:
    c1: ClassicalCode
    c2: ClassicalCode
    hx: np.ndarray
    hz: np.ndarray

    @property
    def n1(self) -> int:
        return self.c1.n

    @property
    def n2(self) -> int:
        return self.c2.n

    @property
    def r1(self) -> int:
        return self.c1.r

    @property
    def r2(self) -> int:
        return self.c2.r

    @property
    def n(self) -> int:
        return self.hx.shape[1]

    def bit_qubit(self, i: int, j: int) -> int:
        return i * self.n2 + j

    def check_qubit(self, a: int, b: int) -> int:
        return self.n1 * self.n2 + a * self.r2 + b

    def pair(self) -> CssPair:
        return CssPair(self.hx, self.hz)


def build_hgp(c1: ClassicalCode, c2: ClassicalCode) -> HgpCode:
    h1, h2 = c1.h, c2.h
    (r1, n1), (r2, n2) = h1.shape, h2.shape
    hx = np.hstack([gf2.kron(h1, gf2.identity(n2)), gf2.kron(gf2.identity(r1), h2.T)])
    hz = np.hstack([gf2.kron(gf2.identity(n1), h2), gf2.kron(h1.T, gf2.identity(r2))])
    # empty blocks (r = 0) can come out of hstack with the wrong width
    hx = hx.reshape(r1 * n2, n1 * n2 + r1 * r2)
    hz = hz.reshape(n1 * r2, n1 * n2 + r1 * r2)
    for m in (hx, hz):
        m.setflags(write=False)
    return HgpCode(c1, c2, hx, hz)


@dataclass(frozen=True)
class HgpParams:
    n: int
    k: int
    d: float
    d_inputs: tuple  # (d1, d2, d1T, d2T)
    dz: float = field(default=INFINITE, compare=False)
    dx: float = field(default=INFINITE, compare=False)


def _formula(code: HgpCode, brute_limit: int) -> HgpParams:
    p1 = classical_params(code.c1, brute_limit)
    p2 = classical_params(code.c2, brute_limit)
    p1t = classical_params(transpose_code(code.c1), brute_limit)
    p2t = classical_params(transpose_code(code.c2), brute_limit)
    n = code.n1 * code.n2 + code.r1 * code.r2
    bit_sector = p1.k * p2.k > 0
    check_sector = p1t.k * p2t.k > 0
    k = p1.k * p2.k + p1t.k * p2t.k
    # Z logicals: bit-type weigh >= d1, check-type >= d2T; X logicals mirror that.
    dz = min([p1.d] * bit_sector + [p2t.d] * check_sector, default=INFINITE)
    dx = min([p2.d] * bit_sector + [p1t.d] * check_sector, default=INFINITE)
    return HgpParams(n, k, min(dz, dx), (p1.d, p2.d, p1t.d, p2t.d), dz, dx)


def _brute(code: HgpCode, brute_limit: int) -> HgpParams:
    pair = code.pair()
    k = code.n - gf2.rank(code.hx) - gf2.rank(code.hz)
    dz = sector_distance(pair, "Z", brute_limit)
    dx = sector_distance(pair, "X", brute_limit)
    return HgpParams(code.n, k, min(dz, dx), (), dz, dx)


def hgp_params(
    code: HgpCode,
    mode: Literal["formula", "brute", "both"] = "formula",
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
) -> HgpParams:
    """``[[n, k, d]]`` from the classical parameters, by brute force, or both (checked equal)."""
    if mode == "formula":
        return _formula(code, brute_limit)
    if mode == "brute":
        return _brute(code, brute_limit)
    if mode != "both":
        raise ValueError(f"unknown mode {mode!r}")
    f, b = _formula(code, brute_limit), _brute(code, brute_limit)
    if (f.n, f.k, f.d, f.dz, f.dx) != (b.n, b.k, b.d, b.dz, b.dx):
        raise FormulaBruteMismatch(
            f"formula [[{f.n},{f.k},{f.d}]] (dz={f.dz}, dx={f.dx}) vs "
            f"brute [[{b.n},{b.k},{b.d}]] (dz={b.dz}, dx={b.dx})"
        )
    return f


# --- logical operators -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LogicalBasis:
    z_ops: np.ndarray  # k x n
    x_ops: np.ndarray
    z_tags: tuple[tuple[str, tuple[int, int]], ...]
    x_tags: tuple[tuple[str, tuple[int, int]], ...]

    @property
    def k(self) -> int:
        return self.z_ops.shape[0]

    def pairing(self) -> np.ndarray:
        return gf2.mul(self.z_ops, self.x_ops.T)


def _products(code: HgpCode, bit_factors, check_factors):
    """Kronecker products padded into the bit-type or check-type block.

    Each ``*_factors`` pair lists the left and right Kronecker factors; the
    left index is the outer loop, which is what makes the Z/X pairing the
    identity.
    """
    nb, nc = code.n1 * code.n2, code.r1 * code.r2
    ops, tags = [], []
    left, right = bit_factors
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            ops.append(np.concatenate([gf2.kron(u, v), np.zeros(nc, dtype=np.uint8)]))
            tags.append(("bit_type", (i, j)))
    left, right = check_factors
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            ops.append(np.concatenate([np.zeros(nb, dtype=np.uint8), gf2.kron(u, v)]))
            tags.append(("check_type", (i, j)))
    return gf2.stack(ops, code.n), tuple(tags)


def _units(m) -> list[np.ndarray]:
    m = gf2.as_matrix(m)
    return [gf2.unit(m.shape[1], c) for c in gf2.non_pivot_columns(m)]


def z_logical_basis(code: HgpCode):
    """Z logicals: ``x_i (x) y_j`` on bit-type qubits and ``a_l (x) b_m`` on check-type qubits.

    ``x_i`` spans ``ker(H1)``, ``y_j`` are unit vectors at the non-pivot
    columns of ``rref(H2)``, ``b_m`` spans ``ker(H2^T)`` and ``a_l`` are unit
    vectors at the non-pivot columns of ``rref(H1^T)``.
    """
    h1, h2 = code.c1.h, code.c2.h
    return _products(code, (gf2.kernel_basis(h1), _units(h2)), (_units(h1.T), gf2.kernel_basis(h2.T)))


def x_logical_basis(code: HgpCode):
    """X logicals: ``y'_p (x) x'_q`` and ``b'_s (x) a'_t``, the roles of H1 and H2 swapped."""
    h1, h2 = code.c1.h, code.c2.h
    return _products(code, (_units(h1), gf2.kernel_basis(h2)), (gf2.kernel_basis(h1.T), _units(h2.T)))


def logical_basis(code: HgpCode) -> LogicalBasis:
    z_ops, z_tags = z_logical_basis(code)
    x_ops, x_tags = x_logical_basis(code)
    return LogicalBasis(z_ops, x_ops, z_tags, x_tags)


@dataclass(frozen=True)
class VerificationReport:
    k: int
    count: bool
    kernel: bool
    independent: bool
    pairing_identity: bool

    @property
    def ok(self) -> bool:
        return self.count and self.kernel and self.independent and self.pairing_identity


def verify_logical_basis(code: HgpCode, basis: LogicalBasis) -> VerificationReport:
    """Check count, kernel membership, independence modulo stabilizers and the pairing.

    Raises VerificationFailed naming the first clause that does not hold.
    """
    k = code.n - gf2.rank(code.hx) - gf2.rank(code.hz)
    if basis.z_ops.shape[0] != k or basis.x_ops.shape[0] != k:
        raise VerificationFailed("a", f"expected {k} operators per side, got {basis.z_ops.shape[0]}/{basis.x_ops.shape[0]}")
    if gf2.mul(code.hx, basis.z_ops.T).any():
        raise VerificationFailed("b", "a Z operator is not annihilated by hx")
    if gf2.mul(code.hz, basis.x_ops.T).any():
        raise VerificationFailed("b", "an X operator is not annihilated by hz")
    for stab, ops, side in ((code.hz, basis.z_ops, "Z"), (code.hx, basis.x_ops, "X")):
        if gf2.rank(np.vstack([stab, ops])) != gf2.rank(stab) + k:
            raise VerificationFailed("c", f"{side} operators are dependent modulo stabilizers")
    if not np.array_equal(basis.pairing(), gf2.identity(k)):
        raise VerificationFailed("d", "pairing matrix is not the identity")
    return VerificationReport(k, True, True, True, True)
