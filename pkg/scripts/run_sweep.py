#!/usr/bin/env python3
"""Run the seeded HGP sweep and print one JSON line per code.

Each line holds the classical draws, [[n, k, d]] (formula and brute force),
the logical-basis verification, and the adversarial and random-schedule
effective distances per sector.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from hgp_robust.distance import effective_distance
from hgp_robust.hgp import hgp_params, logical_basis, verify_logical_basis
from hgp_robust.schedule import hook_mechanisms, make_schedule
from hgp_robust.sweep import SweepConfig, random_pairs


def _d(x):
    return "inf" if x == math.inf else int(x)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--schedules", type=int, default=10, help="random circuit schedules per sector")
    args = ap.parse_args(argv)

    cfg = SweepConfig(count=args.count, seed=args.seed)
    t0 = time.perf_counter()
    failures = 0
    for case in random_pairs(cfg):
        code = case.code()
        p = hgp_params(code, "both")
        row = {
            "index": case.index,
            "draws": case.draws,
            "n": p.n,
            "k": p.k,
            "d": _d(p.d),
            "logicals_ok": verify_logical_basis(code, logical_basis(code)).ok,
        }
        if p.d != math.inf:
            pair = code.pair()
            for sector in ("Z", "X"):
                adv = effective_distance(pair, hook_mechanisms(pair, sector, "adversarial"), sector).value
                circ = [
                    effective_distance(
                        pair, hook_mechanisms(pair, sector, "circuit", make_schedule(pair, sector, "random", seed)), sector
                    ).value
                    for seed in range(args.schedules)
                ]
                row[sector] = {"adversarial": int(adv), "circuit_min": int(min(circ, default=adv))}
                failures += adv != p.d or any(c != p.d for c in circ)
        failures += not row["logicals_ok"]
        print(json.dumps(row))
    print(f"{cfg.count} codes, {failures} failures, {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
