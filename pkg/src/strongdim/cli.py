"""Command-line interface.

Exit codes: 0 success, 1 a verification run found a counterexample, 2 input
error (bad file, bad flags, parameters outside solver caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import graph as gr
from .metric import DisconnectedGraphError, mmd_pairs
from .solvers import clique_number, dims_bruteforce, dims_lower_bound_mmd, twin_free_clique_number
from .spectral import algebraic_connectivity
from .verify import THEOREMS, format_report, verify_theorem

INVARIANTS = ("dims", "varpi", "omega", "mu", "mmd", "diameter", "profile")
PRODUCTS = {"corona": gr.corona, "join": gr.join, "cartesian": gr.cartesian}


class InputError(Exception):
    pass


def _witness(w: Sequence[int]) -> str:
    return ",".join(map(str, w))


def _compute(g: gr.Graph, invariant: str) -> dict:
    if invariant == "dims":
        r = dims_bruteforce(g)
        return {"dims": r.value, "witness": list(r.witness)}
    if invariant == "varpi":
        r = twin_free_clique_number(g)
        return {"varpi": r.value, "witness": list(r.witness)}
    if invariant == "omega":
        r = clique_number(g)
        return {"omega": r.value, "witness": list(r.witness)}
    if invariant == "mu":
        return {"mu": algebraic_connectivity(g)}
    if invariant == "mmd":
        return {"mmd_bound": dims_lower_bound_mmd(g), "mmd_pairs": [list(p) for p in mmd_pairs(g)]}
    prof = gr.profile(g)
    if invariant == "diameter":
        return {"diameter": prof.diameter, "connected": prof.connected}
    return {
        "connected": prof.connected,
        "diameter": prof.diameter,
        "max_degree": prof.max_degree,
        "universal_count": prof.universal_count,
        "true_twin_pairs": [list(p) for p in prof.true_twin_pairs],
    }


def _format_text(result: dict) -> str:
    lines = []
    for key, value in result.items():
        if key == "witness":
            value = _witness(value)
        elif key.endswith("pairs"):
            value = " ".join(f"{u}-{v}" for u, v in value)
        elif isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, float):
            value = f"{value:.12g}"
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> gr.Graph:
    try:
        return gr.read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except gr.GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_compute(args: argparse.Namespace) -> int:
    g = _read(args.input)
    try:
        result = _compute(g, args.invariant)
    except (ValueError, DisconnectedGraphError) as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        sys.stdout.write(json.dumps({"invariant": args.invariant, **result}, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_format_text(result))
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    left, right = _read(args.left), _read(args.right)
    try:
        g = PRODUCTS[args.op](left, right)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    gr.write_graph(g, args.out)
    sys.stdout.write(f"wrote {args.out} n={g.n} m={g.size}\n")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = gr.GraphFamilySpec(args.family, args.n, args.p, args.seed)
    try:
        g = gr.generate(spec)
    except (ValueError, RuntimeError) as exc:
        raise InputError(str(exc)) from None
    gr.write_graph(g, args.out)
    sys.stdout.write(f"wrote {args.out} n={g.n} m={g.size}\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = verify_theorem(args.theorem, args.trials, args.seed, args.max_n)
    except (KeyError, ValueError) as exc:
        raise InputError(exc.args[0]) from None
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(timing=args.timing), sort_keys=True) + "\n")
    else:
        sys.stdout.write(format_report(report, timing=args.timing))
    return 0 if report.failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one invariant of a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--invariant", required=True, choices=INVARIANTS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("product", help="write a corona, join or Cartesian product")
    p.add_argument("--op", required=True, choices=tuple(PRODUCTS))
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("gen", help="write a graph from a named family")
    p.add_argument("--family", required=True, choices=gr.FAMILIES)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="fuzz one theorem against the exact oracles")
    p.add_argument("--theorem", required=True, choices=tuple(THEOREMS))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"strongdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
