"""Command-line interface. Every command prints exactly one JSON document on stdout.

Exit status: 0 on success, 2 when ``check-robustness`` finds a reduced
effective distance, 1 on any error (with ``{"error": ...}`` on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from hgp_robust import gf2
from hgp_robust.codes import (
    DEFAULT_BRUTE_LIMIT,
    FAMILIES,
    INFINITE,
    ClassicalCode,
    classical_params,
    generate,
    parse_code_text,
    parse_dense,
    write_alist,
    write_dense,
)
from hgp_robust.distance import DEFAULT_BUDGET, CssPair, check_robustness, code_distance, effective_distance
from hgp_robust.errors import HgpError
from hgp_robust.hgp import HgpCode, build_hgp, hgp_params, logical_basis, verify_logical_basis
from hgp_robust.schedule import MeasurementSchedule, hook_mechanisms, make_schedule


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _d(d):
    return "inf" if d == INFINITE else int(d)


def _matrix(m) -> list[list[int]]:
    return np.asarray(m, dtype=int).tolist()


def dump(doc) -> str:
    return json.dumps(doc) + "\n"


# --- code JSON ---------------------------------------------------------------


def code_to_dict(code: HgpCode, params=None) -> dict:
    params = params or hgp_params(code)
    return {
        "n1": code.n1,
        "n2": code.n2,
        "r1": code.r1,
        "r2": code.r2,
        "h1": _matrix(code.c1.h),
        "h2": _matrix(code.c2.h),
        "hx": _matrix(code.hx),
        "hz": _matrix(code.hz),
        "params": {"n": params.n, "k": params.k, "d": _d(params.d)},
    }


def _recover_classical(data: dict) -> tuple[np.ndarray, np.ndarray]:
    n1, n2, r1, r2 = (int(data[k]) for k in ("n1", "n2", "r1", "r2"))
    hx = gf2.as_matrix(data["hx"], n1 * n2 + r1 * r2)
    hz = gf2.as_matrix(data["hz"], n1 * n2 + r1 * r2)
    nb = n1 * n2
    h1 = np.zeros((r1, n1), dtype=np.uint8)
    h2 = np.zeros((r2, n2), dtype=np.uint8)
    if r1 and n2:
        h1 = hx[[a * n2 for a in range(r1)]][:, [i * n2 for i in range(n1)]]
    elif r2 and n1:
        h1 = hz[[i * r2 for i in range(n1)]][:, [nb + a * r2 for a in range(r1)]].T
    if n1 and r2:
        h2 = hz[[b for b in range(r2)]][:, [j for j in range(n2)]]
    elif r1 and n2:
        h2 = hx[[j for j in range(n2)]][:, [nb + b for b in range(r2)]].T
    return h1, h2


def code_from_dict(data: dict) -> HgpCode:
    try:
        n1, n2, r1, r2 = (int(data[k]) for k in ("n1", "n2", "r1", "r2"))
        if "h1" in data and "h2" in data:
            h1, h2 = gf2.as_matrix(data["h1"], n1), gf2.as_matrix(data["h2"], n2)
        else:
            h1, h2 = _recover_classical(data)
        code = build_hgp(ClassicalCode(h1.reshape(r1, n1)), ClassicalCode(h2.reshape(r2, n2)))
        hx = gf2.as_matrix(data["hx"], code.n).reshape(code.hx.shape)
        hz = gf2.as_matrix(data["hz"], code.n).reshape(code.hz.shape)
    except (KeyError, ValueError, TypeError) as exc:
        raise HgpError(f"malformed code JSON: {exc}") from exc
    if not (np.array_equal(hx, code.hx) and np.array_equal(hz, code.hz)):
        raise HgpError("code JSON: hx/hz do not match the hypergraph product of h1 and h2")
    return code


# --- input resolution --------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise HgpError(f"cannot read {path}: {exc.strerror}") from exc


def _load_code(args) -> HgpCode | None:
    if args.code:
        try:
            return code_from_dict(json.loads(_read(args.code)))
        except json.JSONDecodeError as exc:
            raise HgpError(f"{args.code} is not valid JSON: {exc}") from exc
    if getattr(args, "h1", None) or getattr(args, "h2", None):
        if not (args.h1 and args.h2):
            raise UsageError("--h1 and --h2 must be given together")
        return build_hgp(parse_code_text(_read(args.h1)), parse_code_text(_read(args.h2)))
    return None


def _load_pair(args) -> tuple[CssPair, HgpCode | None]:
    code = _load_code(args)
    if code is not None:
        return code.pair(), code
    if args.hx and args.hz:
        try:
            return CssPair(parse_dense(_read(args.hx)), parse_dense(_read(args.hz))), None
        except ValueError as exc:
            raise HgpError(str(exc)) from exc
    raise UsageError("give --code, --h1/--h2 or --hx/--hz")


def _sectors(arg: str) -> tuple[str, ...]:
    return {"z": ("Z",), "x": ("X",), "both": ("Z", "X")}[arg]


def _load_schedules(args) -> dict[str, MeasurementSchedule]:
    if not args.schedule:
        return {}
    try:
        data = json.loads(_read(args.schedule))
        if "rows" in data:
            data = {data["sector"]: data}
        return {s.upper(): MeasurementSchedule.from_dict(v) for s, v in data.items()}
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise HgpError(f"malformed schedule JSON: {exc}") from exc


# --- commands ----------------------------------------------------------------


def cmd_gen(args):
    code = generate(args.family, args.n, args.r, args.col_weight, args.seed)
    if args.out:
        text = write_alist(code) if args.format == "alist" else write_dense(code.h)
        Path(args.out).write_text(text)
    p = classical_params(code, args.brute_limit)
    doc = {
        "family": args.family,
        "seed": args.seed,
        "h": _matrix(code.h),
        "params": {"n": p.n, "k": p.k, "d": _d(p.d)},
    }
    return doc, 0


def cmd_build(args):
    code = _load_code(args)
    if code is None:
        raise UsageError("build needs --h1 and --h2")
    doc = code_to_dict(code, hgp_params(code, "formula", args.brute_limit))
    if args.out:
        Path(args.out).write_text(dump(doc))
    return doc, 0


def cmd_params(args):
    code = _load_code(args)
    if code is None:
        raise UsageError("params needs --code or --h1/--h2")
    p = hgp_params(code, args.mode, args.brute_limit)
    return {"n": p.n, "k": p.k, "d": _d(p.d)}, 0


def cmd_logicals(args):
    code = _load_code(args)
    if code is None:
        raise UsageError("logicals needs --code or --h1/--h2")
    basis = logical_basis(code)
    report = verify_logical_basis(code, basis)

    def ops(vectors, tags):
        return [
            {"class": tag, "indices": list(idx), "support": np.flatnonzero(v).tolist()}
            for v, (tag, idx) in zip(vectors, tags)
        ]

    doc = {
        "k": report.k,
        "z": ops(basis.z_ops, basis.z_tags),
        "x": ops(basis.x_ops, basis.x_tags),
        "verification": {
            "count": report.count,
            "kernel": report.kernel,
            "independent": report.independent,
            "pairing_identity": report.pairing_identity,
        },
    }
    return doc, 0


def cmd_schedule(args):
    pair, _ = _load_pair(args)
    out = {}
    for sector in _sectors(args.sector):
        sched = make_schedule(pair, sector, args.order, args.seed)
        out[sector] = {**sched.to_dict(), "depth": sched.depth}
    doc = next(iter(out.values())) if len(out) == 1 else out
    if args.out:
        Path(args.out).write_text(dump(doc))
    return doc, 0


def _schedule_for(pair, sector, args, given):
    if sector in given:
        return given[sector]
    return make_schedule(pair, sector, args.order, args.seed)


def cmd_effective_distance(args):
    pair, _ = _load_pair(args)
    given = _load_schedules(args)
    d = code_distance(pair, args.brute_limit)
    sectors = {}
    for sector in _sectors(args.sector):
        modes = ("adversarial", "circuit") if args.mode == "both" else (args.mode,)
        runs = []
        for mode in modes:
            sched = _schedule_for(pair, sector, args, given) if mode == "circuit" else None
            hooks = hook_mechanisms(pair, sector, mode, sched)
            res = effective_distance(pair, hooks, sector, budget=args.budget, brute_limit=args.brute_limit)
            runs.append(
                {
                    "mode": mode,
                    "effective_d": res.value,
                    "witness": None if res.witness is None else res.witness.to_dict(),
                }
            )
        sectors[sector] = runs[0] if len(runs) == 1 else {**min(runs, key=lambda r: r["effective_d"]), "runs": runs}
    return {"d": _d(d), "sectors": sectors}, 0


def cmd_check_robustness(args):
    pair, _ = _load_pair(args)
    given = _load_schedules(args)
    modes = ("adversarial", "circuit") if args.mode == "both" else (args.mode,)
    report = check_robustness(
        pair,
        modes=modes,
        sectors=_sectors(args.sector),
        policies=((args.order, args.seed if args.order == "random" else None),),
        schedules=given,
        brute_limit=args.brute_limit,
        budget=args.budget,
    )
    return report.to_dict(), 2 if report.verdict == "REDUCED" else 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hgp-robust", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def limits(p):
        p.add_argument("--brute-limit", type=int, default=DEFAULT_BRUTE_LIMIT)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    def hgp_inputs(p):
        p.add_argument("--code")
        p.add_argument("--h1")
        p.add_argument("--h2")

    def css_inputs(p):
        hgp_inputs(p)
        p.add_argument("--hx")
        p.add_argument("--hz")

    def scheduling(p):
        p.add_argument("--order", choices=("natural", "random", "colored"), default="natural")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate a classical check matrix")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--col-weight", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("alist", "dense"), default="alist")
    p.add_argument("--out")
    limits(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("build", help="hypergraph product of two classical codes")
    hgp_inputs(p)
    p.add_argument("--out")
    limits(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("params", help="[[n, k, d]] of an HGP code")
    hgp_inputs(p)
    p.add_argument("--mode", choices=("formula", "brute", "both"), default="formula")
    limits(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("logicals", help="logical operator bases and their verification")
    hgp_inputs(p)
    limits(p)
    p.set_defaults(func=cmd_logicals)

    p = sub.add_parser("schedule", help="stabilizer measurement schedule")
    css_inputs(p)
    p.add_argument("--sector", choices=("x", "z", "both"), default="z")
    scheduling(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_schedule)

    for name, func, help_text in (
        ("effective-distance", cmd_effective_distance, "exact effective distance"),
        ("check-robustness", cmd_check_robustness, "compare effective distance with d"),
    ):
        p = sub.add_parser(name, help=help_text)
        css_inputs(p)
        p.add_argument("--schedule")
        p.add_argument("--mode", choices=("circuit", "adversarial", "both"), default="adversarial")
        p.add_argument("--sector", choices=("x", "z", "both"), default="both")
        scheduling(p)
        limits(p)
        p.set_defaults(func=func)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, code = args.func(args)
    except UsageError as exc:
        doc, code = {"error": str(exc), "type": "UsageError"}, 1
    except (HgpError, ValueError) as exc:
        doc, code = {"error": str(exc), "type": type(exc).__name__}, 1
    if code == 1:
        print(f"hgp-robust: {doc['error']}", file=stderr)
    stdout.write(dump(doc))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
