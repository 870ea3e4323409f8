"""Seeded families of small HGP codes used by the test suite and the scripts."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from hgp_robust.codes import ClassicalCode, generate
from hgp_robust.hgp import HgpCode, build_hgp


@dataclass(frozen=True)
class SweepConfig:
    count: int = 50
    seed: int = 20240517
    min_n: int = 2
    max_n: int = 4
    max_r: int = 3
    max_col_weight: int = 2
    # favour three checks: with n <= 4 that is the only way to reach d >= 3
    r_weights: tuple[float, ...] = (0.1, 0.2, 0.7)


@dataclass(frozen=True)
class SweepCase:
    index: int
    c1: ClassicalCode
    c2: ClassicalCode
    draws: tuple  # ((n, r, col_weight, seed), ...) for each classical code

    def code(self) -> HgpCode:
        return build_hgp(self.c1, self.c2)


def _draw_classical(rng: np.random.Generator, cfg: SweepConfig):
    n = int(rng.integers(cfg.min_n, cfg.max_n + 1))
    probs = np.resize(np.asarray(cfg.r_weights, dtype=float), cfg.max_r)
    r = int(rng.choice(np.arange(1, cfg.max_r + 1), p=probs / probs.sum()))
    # a column weight too small to touch every row can never succeed
    weights = [w for w in range(1, min(r, cfg.max_col_weight) + 1) if n * w >= r]
    w = int(weights[-1] if rng.random() < 0.8 else rng.choice(weights))
    seed = int(rng.integers(2**31))
    return generate("random_ldpc", n, r, w, seed), (n, r, w, seed)


def random_pairs(cfg: SweepConfig = SweepConfig()) -> Iterator[SweepCase]:
    rng = np.random.default_rng(cfg.seed)
    for i in range(cfg.count):
        c1, d1 = _draw_classical(rng, cfg)
        c2, d2 = _draw_classical(rng, cfg)
        yield SweepCase(i, c1, c2, (d1, d2))
