"""Stabilizer measurement schedules and the fault mechanisms they induce.

Each stabilizer is measured with its own ancilla, coupled to the data qubits
one gate at a time in the order given by the schedule. An ancilla fault after
gate ``j`` spreads to the qubits touched by gates ``j+1 .. w``. The
adversarial model instead lets a single fault land on any subset of the
stabilizer's support.

Sector ``"Z"`` means Z-type errors: hooks come from the rows of ``hz`` and
the errors are caught by ``hx``. Sector ``"X"`` is the mirror image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

import numpy as np

from hgp_robust import gf2
from hgp_robust.errors import ColoringFailed, InvalidSchedule

Sector = Literal["X", "Z"]
SECTORS: tuple[str, ...] = ("Z", "X")
POLICIES: tuple[str, ...] = ("natural", "random", "colored")


def stabilizer_matrix(pair, sector: Sector) -> np.ndarray:
    """Rows measured in ``sector``: ``hz`` for Z errors, ``hx`` for X errors."""
    if sector == "Z":
        return pair.hz
    if sector == "X":
        return pair.hx
    raise ValueError(f"sector must be 'X' or 'Z', got {sector!r}")


def max_stabilizer_weight(pair) -> int:
    weights = [int(m.sum(axis=1).max()) for m in (pair.hx, pair.hz) if m.shape[0]]
    return max(weights, default=0)


@dataclass(frozen=True)
class MeasurementSchedule:
    """Gate order for every stabilizer of one sector, optionally with time steps."""

    sector: str
    orders: tuple[tuple[int, ...], ...]
    steps: tuple[tuple[int, ...], ...] | None = None

    @property
    def depth(self) -> int:
        if self.steps is not None:
            return max((max(s) + 1 for s in self.steps if s), default=0)
        return max((len(o) for o in self.orders), default=0)

    def validate(self, matrix) -> None:
        """Raise InvalidSchedule unless this schedule fits ``matrix``."""
        matrix = gf2.as_matrix(matrix)
        if len(self.orders) != matrix.shape[0]:
            raise InvalidSchedule(f"{len(self.orders)} orders for {matrix.shape[0]} stabilizers")
        for s, order in enumerate(self.orders):
            if sorted(order) != np.flatnonzero(matrix[s]).tolist():
                raise InvalidSchedule(f"order of stabilizer {s} is not a permutation of its support")
        if self.steps is None:
            return
        if len(self.steps) != len(self.orders):
            raise InvalidSchedule("steps and orders have different lengths")
        busy: set[tuple[int, int]] = set()
        for s, (order, steps) in enumerate(zip(self.orders, self.steps)):
            if len(steps) != len(order):
                raise InvalidSchedule(f"stabilizer {s}: {len(steps)} steps for {len(order)} gates")
            if len(set(steps)) != len(steps):
                raise InvalidSchedule(f"ancilla {s} has two gates in one step")
            if list(steps) != sorted(steps):
                raise InvalidSchedule(f"stabilizer {s}: steps do not follow the gate order")
            for q, t in zip(order, steps):
                if (q, t) in busy:
                    raise InvalidSchedule(f"qubit {q} is used twice in step {t}")
                busy.add((q, t))

    def to_dict(self) -> dict:
        rows = []
        for s, order in enumerate(self.orders):
            row = {"stabilizer": s, "order": list(order)}
            if self.steps is not None:
                row["steps"] = list(self.steps[s])
            rows.append(row)
        return {"sector": self.sector, "rows": rows}

    @classmethod
    def from_dict(cls, data: dict) -> MeasurementSchedule:
        rows = sorted(data["rows"], key=lambda r: r["stabilizer"])
        if [r["stabilizer"] for r in rows] != list(range(len(rows))):
            raise InvalidSchedule("stabilizer indices must be 0..m-1")
        has_steps = [("steps" in r) for r in rows]
        if any(has_steps) and not all(has_steps):
            raise InvalidSchedule("either every row has steps or none does")
        orders = tuple(tuple(int(q) for q in r["order"]) for r in rows)
        steps = tuple(tuple(int(t) for t in r["steps"]) for r in rows) if rows and all(has_steps) else None
        return cls(str(data["sector"]).upper(), orders, steps)


def bipartite_edge_coloring(matrix) -> dict[tuple[int, int], int]:
    """Color the edges (row, col) of the incidence graph of ``matrix`` with max-degree colors.

    Each clash is resolved by swapping two colors along an alternating path
    (Konig's argument); in a bipartite graph the path never returns to the
    edge being colored.
    """
    matrix = gf2.as_matrix(matrix)
    rows, cols = matrix.shape
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(matrix))]
    degree = max(
        [int(matrix.sum(axis=1).max()) if rows else 0, int(matrix.sum(axis=0).max()) if cols else 0]
    )
    # side 0 = stabilizers, side 1 = qubits; at[side][vertex][color] = neighbor
    at: list[list[dict[int, int]]] = [[{} for _ in range(rows)], [{} for _ in range(cols)]]

    def free(side, x):
        return next(c for c in range(degree) if c not in at[side][x])

    for u, v in edges:
        a, b = free(0, u), free(1, v)
        if a in at[1][v]:
            path = []
            side, x, c = 1, v, a
            while c in at[side][x]:
                y = at[side][x][c]
                path.append((side, x, y, c))
                side, x, c = 1 - side, y, (b if c == a else a)
            for side, x, y, c in path:
                del at[side][x][c]
                del at[1 - side][y][c]
            for side, x, y, c in path:
                c2 = b if c == a else a
                at[side][x][c2] = y
                at[1 - side][y][c2] = x
        if a in at[0][u] or a in at[1][v]:
            raise ColoringFailed(f"color {a} still busy at edge ({u}, {v})")
        at[0][u][a] = v
        at[1][v][a] = u

    coloring = {}
    for u in range(rows):
        for c, v in at[0][u].items():
            coloring[(u, v)] = c
    if len(coloring) != len(edges) or any(c >= degree for c in coloring.values()):
        raise ColoringFailed("coloring is incomplete or uses too many colors")
    return coloring


def incidence_degree(matrix) -> int:
    matrix = gf2.as_matrix(matrix)
    if matrix.size == 0:
        return 0
    return int(max(matrix.sum(axis=1).max(), matrix.sum(axis=0).max()))


def make_schedule(pair, sector: Sector, policy: str = "natural", seed: int | None = None) -> MeasurementSchedule:
    """Build a measurement schedule for the stabilizers of ``sector``.

    ``natural`` measures each support in ascending qubit order, ``random``
    draws a seeded uniform permutation per stabilizer, and ``colored`` runs all
    stabilizers in parallel using an optimal edge coloring (depth equals the
    maximum degree of the stabilizer/qubit incidence graph).
    """
    matrix = gf2.as_matrix(stabilizer_matrix(pair, sector))
    supports = [np.flatnonzero(row).tolist() for row in matrix]
    if policy == "natural":
        return MeasurementSchedule(sector, tuple(tuple(s) for s in supports))
    if policy == "random":
        rng = np.random.default_rng(0 if seed is None else seed)
        return MeasurementSchedule(sector, tuple(tuple(int(q) for q in rng.permutation(s)) for s in supports))
    if policy == "colored":
        coloring = bipartite_edge_coloring(matrix)
        orders, steps = [], []
        for s, supp in enumerate(supports):
            gates = sorted((coloring[(s, q)], q) for q in supp)
            orders.append(tuple(q for _, q in gates))
            steps.append(tuple(c for c, _ in gates))
        schedule = MeasurementSchedule(sector, tuple(orders), tuple(steps))
        schedule.validate(matrix)
        if schedule.depth != incidence_degree(matrix):
            raise ColoringFailed(f"depth {schedule.depth} != max degree {incidence_degree(matrix)}")
        return schedule
    raise ValueError(f"unknown schedule policy {policy!r}")


# --- fault mechanisms --------------------------------------------------------


@dataclass(frozen=True)
class Mechanism:
    """A single unit-cost fault and the data qubits it flips."""

    support: tuple[int, ...]
    kind: str  # "data_error" | "hook" | "adversarial_subset"
    stabilizer: int | None = None
    position: int | None = None  # hooks: the fault happens after this many gates

    @property
    def cost(self) -> int:
        return 1

    @property
    def packed(self) -> int:
        out = 0
        for q in self.support:
            out |= 1 << q
        return out

    def provenance(self) -> dict:
        if self.kind == "data_error":
            return {"kind": "data_error", "qubit": self.support[0]}
        out = {"kind": self.kind, "stabilizer": self.stabilizer}
        if self.position is not None:
            out["position"] = self.position
        return out

    def to_dict(self) -> dict:
        return {"provenance": self.provenance(), "support": list(self.support)}


def data_error_mechanisms(n: int) -> list[Mechanism]:
    return [Mechanism((q,), "data_error") for q in range(n)]


def hook_support(order, fault_after: int) -> tuple[int, ...]:
    """Qubits hit by an ancilla fault occurring after gate ``fault_after`` (1-based)."""
    if not 0 <= fault_after <= len(order):
        raise ValueError(f"fault position {fault_after} outside 0..{len(order)}")
    return tuple(sorted(order[fault_after:]))


def _dedupe(mechanisms):
    seen = set()
    out = []
    for m in mechanisms:
        if len(m.support) < 2 or m.support in seen:
            continue
        seen.add(m.support)
        out.append(m)
    return out


def hook_mechanisms(
    pair,
    sector: Sector,
    mode: str = "adversarial",
    schedule: MeasurementSchedule | None = None,
) -> list[Mechanism]:
    """Multi-qubit fault mechanisms of one sector.

    Singletons are dropped (data errors already cover them) and repeated
    supports keep only their first occurrence. Circuit mode only emits
    suffixes of each gate order: the matching prefix differs from a suffix by
    the whole stabilizer, so it adds nothing.
    """
    matrix = gf2.as_matrix(stabilizer_matrix(pair, sector))
    found = []
    if mode == "circuit":
        if schedule is None:
            raise ValueError("circuit mode needs a schedule")
        if schedule.sector != sector:
            raise InvalidSchedule(f"schedule is for sector {schedule.sector}, not {sector}")
        schedule.validate(matrix)
        for s, order in enumerate(schedule.orders):
            for j in range(1, len(order)):
                found.append(Mechanism(hook_support(order, j), "hook", s, j))
    elif mode == "adversarial":
        for s, row in enumerate(matrix):
            supp = np.flatnonzero(row).tolist()
            for size in range(2, len(supp) + 1):
                for subset in itertools.combinations(supp, size):
                    found.append(Mechanism(subset, "adversarial_subset", s))
    else:
        raise ValueError(f"mode must be 'circuit' or 'adversarial', got {mode!r}")
    return _dedupe(found)
