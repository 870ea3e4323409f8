"""Exact code distance and effective distance of CSS codes.

A Z-type logical is a vector in ``ker(hx)`` outside ``rowspace(hz)``; X-type
is the mirror image. The effective distance of a sector is the fewest unit-cost
mechanisms (single data errors plus hooks) whose supports XOR to a logical.

The search works on cosets of the stabilizer row space. Each vector is mapped
to ``(syndrome, canonical coset representative)`` packed into one int; the map
is linear, so XOR of mechanisms corresponds to XOR of their images and a
logical is exactly an image with zero syndrome and nonzero representative.
Sums of up to ``w`` mechanisms are found by meeting in the middle between the
sets of sums of at most ``w // 2`` and ``w - w // 2`` mechanisms.
"""

from __future__ import annotations

import bisect
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from hgp_robust import gf2
from hgp_robust.codes import DEFAULT_BRUTE_LIMIT, INFINITE
from hgp_robust.errors import KernelTooLarge, NoLogicals, SearchBudgetExceeded
from hgp_robust.schedule import (
    SECTORS,
    Mechanism,
    MeasurementSchedule,
    data_error_mechanisms,
    hook_mechanisms,
    make_schedule,
    max_stabilizer_weight,
)

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True, eq=False)
class CssPair:
    """Two check matrices on the same qubits with ``hx @ hz.T == 0``."""

    hx: np.ndarray
    hz: np.ndarray

    def __post_init__(self):
        hx, hz = gf2.as_matrix(self.hx), gf2.as_matrix(self.hz)
        if hx.shape[1] != hz.shape[1]:
            raise ValueError(f"hx has {hx.shape[1]} columns but hz has {hz.shape[1]}")
        if gf2.mul(hx, hz.T).any():
            raise ValueError("hx and hz do not commute")
        for m in (hx, hz):
            m.setflags(write=False)
        object.__setattr__(self, "hx", hx)
        object.__setattr__(self, "hz", hz)

    @property
    def n(self) -> int:
        return self.hx.shape[1]

    @property
    def k(self) -> int:
        return self.n - gf2.rank(self.hx) - gf2.rank(self.hz)

    @classmethod
    def of(cls, code) -> CssPair:
        if isinstance(code, CssPair):
            return code
        return cls(code.hx, code.hz)


def sector_matrices(pair, sector: str) -> tuple[np.ndarray, np.ndarray]:
    """``(detecting matrix, stabilizer matrix)`` for errors of type ``sector``."""
    if sector == "Z":
        return pair.hx, pair.hz
    if sector == "X":
        return pair.hz, pair.hx
    raise ValueError(f"sector must be 'X' or 'Z', got {sector!r}")


def sector_k(pair, sector: str) -> int:
    detect, stab = sector_matrices(pair, sector)
    return detect.shape[1] - gf2.rank(detect) - gf2.rank(stab)


def is_logical(pair, v, sector: str) -> bool:
    detect, stab = sector_matrices(pair, sector)
    v = gf2.as_vector(v)
    if gf2.mul(detect, v).any():
        return False
    return gf2.solve_in_image(gf2.as_matrix(stab).T, v) is None


def sector_distance(pair, sector: str, brute_limit: int = DEFAULT_BRUTE_LIMIT):
    """Minimum weight of a logical of one sector, by enumerating the kernel."""
    detect, stab = sector_matrices(pair, sector)
    n = detect.shape[1]
    basis = gf2.kernel_basis(detect)
    if len(basis) > brute_limit:
        raise KernelTooLarge(f"kernel dimension {len(basis)} exceeds brute_limit {brute_limit}")
    elements = gf2.span_array([gf2.pack(v) for v in basis], n)
    reduced = gf2.RowspaceReducer(stab).reduce_array(elements)
    logical = elements[reduced != 0]
    if logical.size == 0:
        return INFINITE
    return int(gf2.popcount_array(logical).min())


def code_distance(pair, brute_limit: int = DEFAULT_BRUTE_LIMIT):
    return min(sector_distance(pair, s, brute_limit) for s in SECTORS)


# --- effective distance ------------------------------------------------------


class _CosetMap:
    """Linear map from packed vectors to ``rep | syndrome << n``."""

    def __init__(self, pair, sector):
        detect, stab = sector_matrices(pair, sector)
        self.n = detect.shape[1]
        self.reducer = gf2.RowspaceReducer(stab)
        self.detect_rows = gf2.pack_rows(detect)

    def __call__(self, v: int) -> int:
        rep = self.reducer.reduce(v)
        synd = 0
        for i, row in enumerate(self.detect_rows):
            if gf2.parity(row & v):
                synd |= 1 << i
        return rep | (synd << self.n)


@dataclass(frozen=True)
class Witness:
    mechanisms: tuple[Mechanism, ...]
    xor_support: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"mechanisms": [m.to_dict() for m in self.mechanisms], "xor_support": list(self.xor_support)}


@dataclass(frozen=True)
class EffectiveDistance:
    value: int
    witness: Witness | None
    capped: bool  # True when nothing below ``cap`` was found
    evaluations: int = field(default=0, compare=False)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, amount):
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search needed more than {self.limit} subset evaluations")


def with_data_errors(n: int, hooks: Iterable[Mechanism]) -> list[Mechanism]:
    """Single-qubit data errors first, then the hooks; repeated supports keep the first."""
    out, seen = [], set()
    for m in [*data_error_mechanisms(n), *hooks]:
        if m.support not in seen:
            seen.add(m.support)
            out.append(m)
    return out


def effective_distance(
    pair,
    mechanisms: Sequence[Mechanism],
    sector: str,
    cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
) -> EffectiveDistance:
    """Fewest mechanisms whose combined support is a logical of ``sector``.

    Data errors on every qubit are always included. Sizes ``1 .. cap - 1`` are
    searched exhaustively; if none works the answer is ``cap`` (by default the
    code distance, which data errors alone achieve). The witness is the
    lexicographically first minimal subset in mechanism order.
    """
    pair = CssPair.of(pair)
    if sector_k(pair, sector) == 0:
        raise NoLogicals(f"sector {sector} has no logical operators")
    if cap is None:
        cap = code_distance(pair, brute_limit)
    mechs = with_data_errors(pair.n, mechanisms)
    phi = _CosetMap(pair, sector)
    n = pair.n
    states = [phi(m.packed) for m in mechs]
    gens = sorted({s for s in states if s})
    tracker = _Budget(budget)

    levels = [{0}]  # levels[j] = all sums of at most j generators

    def level(j):
        while len(levels) <= j:
            prev = levels[-1]
            tracker.spend(len(prev) * len(gens))
            nxt = set(prev)
            for x in prev:
                for g in gens:
                    nxt.add(x ^ g)
            levels.append(nxt)
        return levels[j]

    indexes = {}

    def index(j):
        # syndrome -> representative, or None when several reps share the syndrome
        if j not in indexes:
            idx: dict[int, int | None] = {}
            for x in level(j):
                synd, rep = x >> n, x & ((1 << n) - 1)
                if synd in idx and idx[synd] != rep:
                    idx[synd] = None
                else:
                    idx.setdefault(synd, rep)
            indexes[j] = idx
        return indexes[j]

    for w in range(1, cap):
        a = w // 2
        b = w - a
        idx = index(a)
        mask = (1 << n) - 1
        tracker.spend(len(level(b)))
        for y in level(b):
            synd = y >> n
            if synd in idx and (idx[synd] is None or idx[synd] != y & mask):
                witness = _lexicographic_witness(mechs, states, w, n, tracker)
                return EffectiveDistance(w, witness, False, tracker.used)
    return EffectiveDistance(cap, None, True, tracker.used)


def _lexicographic_witness(mechs, states, w, n, tracker) -> Witness:
    mask = (1 << n) - 1
    by_synd: dict[int, list[int]] = {}
    for i, s in enumerate(states):
        by_synd.setdefault(s >> n, []).append(i)

    def last(start, cur):
        # smallest i >= start with states[i] ^ cur logical
        candidates = by_synd.get(cur >> n, [])
        pos = bisect.bisect_left(candidates, start)
        tracker.spend(len(candidates) - pos + 1)
        for i in candidates[pos:]:
            if (states[i] ^ cur) & mask:
                return i
        return None

    def search(start, remaining, cur, chosen):
        if remaining == 1:
            i = last(start, cur)
            return None if i is None else [*chosen, i]
        for i in range(start, len(states) - remaining + 1):
            found = search(i + 1, remaining - 1, cur ^ states[i], [*chosen, i])
            if found is not None:
                return found
        return None

    picked = search(0, w, 0, [])
    if picked is None:
        raise AssertionError("meet-in-the-middle hit but no witness found")
    xor = 0
    for i in picked:
        xor ^= mechs[i].packed
    return Witness(tuple(mechs[i] for i in picked), tuple(gf2.support(xor)))


# --- robustness check --------------------------------------------------------


@dataclass(frozen=True)
class SectorRun:
    sector: str
    mode: str
    schedule: str | None  # e.g. "random:3"; None for adversarial runs
    effective_d: int
    witness: Witness | None

    def to_dict(self) -> dict:
        out = {"mode": self.mode}
        if self.schedule is not None:
            out["schedule"] = self.schedule
        out["effective_d"] = self.effective_d
        out["witness"] = None if self.witness is None else self.witness.to_dict()
        return out


@dataclass(frozen=True)
class DistanceReport:
    d: float
    runs: tuple[SectorRun, ...]
    verdict: str  # "ROBUST" | "REDUCED" | "UNDEFINED"
    max_weight: int = 0
    reason: str | None = None

    @property
    def effective_d(self):
        return min((r.effective_d for r in self.runs), default=self.d)

    def binding(self, sector: str) -> SectorRun | None:
        """The run with the smallest effective distance in ``sector`` (first on ties)."""
        runs = [r for r in self.runs if r.sector == sector]
        return min(runs, key=lambda r: r.effective_d) if runs else None

    def to_dict(self) -> dict:
        sectors = {}
        for s in SECTORS:
            runs = [r for r in self.runs if r.sector == s]
            if not runs:
                continue
            entry = self.binding(s).to_dict()
            if len(runs) > 1:
                entry["runs"] = [r.to_dict() for r in runs]
            sectors[s] = entry
        out = {"d": _jsonable(self.d), "sectors": sectors, "verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _jsonable(d):
    return "inf" if d == INFINITE else int(d)


def lower_bound(d: int, max_weight: int) -> int:
    """Worst-case effective distance when each fault reaches ``floor(w/2)`` qubits."""
    return math.ceil(d / max(1, max_weight // 2))


def check_robustness(
    code,
    modes: Sequence[str] = ("adversarial",),
    sectors: Sequence[str] = SECTORS,
    policies: Sequence[tuple[str, int | None]] = (("natural", None),),
    schedules: dict[str, MeasurementSchedule] | None = None,
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
    budget: int = DEFAULT_BUDGET,
) -> DistanceReport:
    """Compare the effective distance against ``d`` for every requested run.

    Circuit mode is run once per schedule: the explicit ``schedules`` given
    for a sector, or else one schedule per ``(policy, seed)`` entry.
    """
    pair = CssPair.of(code)
    d = code_distance(pair, brute_limit)
    weight = max_stabilizer_weight(pair)
    if d == INFINITE:
        return DistanceReport(d, (), "UNDEFINED", weight, "code has no logical operators")
    runs = []
    for sector in sectors:
        if sector_k(pair, sector) == 0:
            return DistanceReport(d, (), "UNDEFINED", weight, f"sector {sector} has no logical operators")
        for mode in modes:
            if mode == "adversarial":
                hooks = hook_mechanisms(pair, sector, "adversarial")
                res = effective_distance(pair, hooks, sector, cap=d, budget=budget)
                runs.append(SectorRun(sector, mode, None, res.value, res.witness))
                continue
            if mode != "circuit":
                raise ValueError(f"unknown mode {mode!r}")
            if schedules and sector in schedules:
                plan = [("given", schedules[sector])]
            else:
                plan = [
                    (policy if seed is None else f"{policy}:{seed}", make_schedule(pair, sector, policy, seed))
                    for policy, seed in policies
                ]
            for label, sched in plan:
                hooks = hook_mechanisms(pair, sector, "circuit", sched)
                res = effective_distance(pair, hooks, sector, cap=d, budget=budget)
                runs.append(SectorRun(sector, mode, label, res.value, res.witness))
    verdict = "ROBUST" if all(r.effective_d == d for r in runs) else "REDUCED"
    return DistanceReport(d, tuple(runs), verdict, weight)
