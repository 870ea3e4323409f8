#!/usr/bin/env python3
"""Effective distance of rotated surface codes, where hook errors do hurt.

Prints the code distance, the adversarial effective distance per sector and
the witness for each requested size.
"""

import argparse
import json

from hgp_robust.controls import rotated_surface_code
from hgp_robust.distance import code_distance, effective_distance
from hgp_robust.schedule import hook_mechanisms


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="*", type=int, default=[3, 5])
    args = ap.parse_args(argv)
    for d in args.sizes:
        pair = rotated_surface_code(d)
        out = {"size": d, "d": int(code_distance(pair)), "sectors": {}}
        for sector in ("Z", "X"):
            res = effective_distance(pair, hook_mechanisms(pair, sector, "adversarial"), sector)
            out["sectors"][sector] = {
                "effective_d": int(res.value),
                "witness": None if res.witness is None else res.witness.to_dict(),
            }
        print(json.dumps(out))


if __name__ == "__main__":
    main()
