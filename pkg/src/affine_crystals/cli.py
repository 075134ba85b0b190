"""Command-line front end.

Subcommands: ``path`` (run a lowering word in one path model), ``quiver``
(full geometric dump for a word), ``graph`` (DOT export of a crystal ball)
and ``verify`` (named check suites).  All output is deterministic given the
inputs and the seed; CRYSTAL_SEED overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cartan import weight
from .crystal_core import generate_graph
from .iso import report_to_json, run_pipeline
from .linalg import PRIME
from .paths import DeadWordError, from_word, ground_path, parse_word, path_to_json
from .perfect import B1Elem, BnElem, ground_adj, render
from .suites import run_suite

KIND_BY_FLAG = {"b1": "B1", "bn": "Bn", "ad": "Ad"}


def _dump(data, path: str | None):
    text = json.dumps(data, sort_keys=True, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _seed(args) -> int:
    env = os.environ.get("CRYSTAL_SEED")
    return int(env) if env is not None else args.seed


def _lam(args):
    w = weight(int(c) for c in args.lam.split(","))
    if w.n != args.n:
        raise SystemExit(f"--lambda has {w.n + 1} coefficients but --n is {args.n}")
    return w


def cmd_path(args) -> int:
    lam = _lam(args)
    kind = KIND_BY_FLAG[args.kind]
    try:
        p = from_word(lam, kind, parse_word(args.word))
    except DeadWordError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    data = path_to_json(p)
    data["rendered"] = [render(p.factor(k)) for k in range(p.tail_start + 1)]
    _dump(data, args.out)
    return 0


def cmd_quiver(args) -> int:
    import random

    from .quiver import commutant_basis, sample_in_commutant, wall_graded_map

    lam = _lam(args)
    p = None if args.field == "qq" else PRIME
    report = run_pipeline(lam, parse_word(args.word), seed=_seed(args), p=p)
    data = report_to_json(report)
    x, _ = wall_graded_map(lam.n, report.walls_p1)
    xbar = sample_in_commutant(commutant_basis(x, p), x.dims, -1,
                               random.Random(_seed(args)), p)
    data["sampled_xbar_blocks"] = [[list(r) for r in blk] for blk in xbar.blocks]
    data["seed"] = _seed(args)
    data["field"] = args.field
    _dump(data, args.out)
    return 0 if report.ok else 1


def _graph_seed_elem(args):
    if args.crystal == "path":
        return ground_path(_lam(args), KIND_BY_FLAG[args.kind])
    n, lvl = args.n, args.level
    if args.crystal == "b1":
        return B1Elem((lvl,) + (0,) * n)
    if args.crystal == "bn":
        return BnElem((lvl,) + (0,) * n)
    return ground_adj(weight((lvl,) + (0,) * n))


def cmd_graph(args) -> int:
    seed_elem = _graph_seed_elem(args)
    g = generate_graph(seed_elem, max_nodes=args.max_nodes, max_depth=args.depth)
    lines = ["digraph crystal {"]
    for t, node in enumerate(g.nodes):
        label = str(node) if args.crystal == "path" else render(node)
        lines.append(f'  n{t} [label="{label}"];')
    drawn = set()
    for src, op, i, dst in g.edges:
        if op != "f" or (src, i, dst) in drawn:
            continue
        drawn.add((src, i, dst))
        lines.append(f'  n{src} -> n{dst} [label="{i}"];')
    if not g.complete:
        lines.append('  meta [label="truncated", shape=box];')
    lines.append("}")
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, seed=_seed(args))
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.ok]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="affine-crystals")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("path", help="apply a lowering word in one path model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="comma-separated coefficients a0,..,an")
    p.add_argument("--kind", choices=sorted(KIND_BY_FLAG), default="b1")
    p.add_argument("--word", default="")
    p.add_argument("--out")
    p.set_defaults(func=cmd_path)

    q = sub.add_parser("quiver", help="geometric pipeline dump for a word")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--word", default="")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--field", choices=("fp", "qq"), default="fp")
    q.add_argument("--out")
    q.set_defaults(func=cmd_quiver)

    g = sub.add_parser("graph", help="DOT export of a crystal ball")
    g.add_argument("--crystal", choices=("b1", "bn", "ad", "path"), default="b1")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--level", type=int, default=1)
    g.add_argument("--lambda", dest="lam", default="1",
                   help="only for --crystal path")
    g.add_argument("--kind", choices=sorted(KIND_BY_FLAG), default="b1")
    g.add_argument("--depth", type=int, default=None)
    g.add_argument("--max-nodes", type=int, default=2000)
    g.add_argument("--out")
    g.set_defaults(func=cmd_graph)

    v = sub.add_parser("verify", help="run a named check suite")
    v.add_argument("suite", choices=("example", "xi", "perfect", "bridge", "axioms", "all"))
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
