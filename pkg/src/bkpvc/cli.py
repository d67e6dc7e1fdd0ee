"""``bkpvc`` command line.

Exit codes: 0 success, 1 semantic failure (violation, not a cover, bound
violated in a campaign), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .bounds import (branching_preserved, check_certificate, lower_bound,
                     peel_certificate, reduce_to_directed)
from .campaign import TrialFailed, run_campaign
from .errors import BkpvcError, NotACover
from .generators import gen_directed_extremal, gen_random, gen_undirected_extremal
from .io import dumps_forest, load_forest, to_dot
from .solver import solve, solve_bruteforce
from .verify import verify_fast


def parse_ids(text: str) -> list[int]:
    """Comma/whitespace separated ids, a JSON list, or ``@file`` holding either."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(tok) for tok in text.replace(",", " ").split()]


def parse_range(text: str) -> list[int]:
    """``5``, ``1-60`` or ``2,3,5``."""
    out = []
    for part in text.split(","):
        if "-" in part.strip()[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_verify(args) -> int:
    forest = load_forest(args.forest)
    violation = verify_fast(forest, args.k, parse_ids(args.cover))
    if violation is None:
        _emit({"ok": True})
        return 0
    _emit(violation.to_dict())
    return 1


def cmd_solve(args) -> int:
    forest = load_forest(args.forest)
    result = solve_bruteforce(forest, args.k) if args.oracle else solve(forest, args.k)
    _emit(result.to_dict())
    return 0


def cmd_bound(args) -> int:
    _emit(lower_bound(args.kind, args.n, args.k).to_dict())
    return 0


def cmd_certify(args) -> int:
    forest = load_forest(args.forest)
    cover = parse_ids(args.cover)
    try:
        if forest.directed:
            trace = peel_certificate(forest, args.k, cover)
            check_certificate(forest, args.k, cover, trace)
            _emit(trace.to_dict())
            return 0
        # undirected: certify the reduced forest, then pay one vertex per component
        red = reduce_to_directed(forest)
        bound = lower_bound("undirected", forest.n, args.k)
        violation = verify_fast(forest, args.k, cover)
        if violation is not None:
            raise NotACover(f"not a branching {args.k}-path vertex cover: {violation.to_dict()}")
        out = {"reduction": red.to_dict(), "bound": bound.to_dict(), "cover_size": len(set(cover))}
        if red.H.n == 0:
            out["trace"] = None
            out["certified"] = forest.n
        else:
            q = red.restrict(cover)
            trace = peel_certificate(red.H, args.k, q)
            check_certificate(red.H, args.k, q, trace)
            out["trace"] = trace.to_dict()
            out["certified"] = trace.certified + red.p
        _emit(out)
        return 0
    except NotACover as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cmd_reduce(args) -> int:
    forest = load_forest(args.forest)
    if forest.directed:
        raise BkpvcError("reduce expects an undirected forest")
    red = reduce_to_directed(forest)
    if args.format == "dot":
        sys.stdout.write(to_dot(red.H, "H"))
    else:
        out = red.to_dict()
        out["branching_preserved"] = branching_preserved(forest, red)
        _emit(out)
    return 0


def cmd_generate(args) -> int:
    if args.random:
        if args.kind is None or args.n is None:
            raise BkpvcError("--random needs --kind and --n")
        forest = gen_random(args.kind, args.n, args.seed, args.component_bias)
    else:
        if args.family is None or args.i is None or args.k is None:
            raise BkpvcError("give --family with --i and --k, or --random")
        gen = gen_directed_extremal if args.family == "directed-extremal" else gen_undirected_extremal
        forest = gen(args.i, args.k)
    if args.dot or args.format == "dot":
        sys.stdout.write(to_dot(forest))
    else:
        print(dumps_forest(forest))
    return 0


def cmd_campaign(args) -> int:
    try:
        report = run_campaign(args.kind, parse_range(args.n), parse_range(args.k),
                              args.trials, args.seed, include_extremal=args.extremal,
                              jobs=args.jobs)
    except TrialFailed as exc:
        print(f"error: trial failed: {exc}", file=sys.stderr)
        print(json.dumps({"seed": exc.seed, "forest": json.loads(exc.forest_json)}), file=sys.stderr)
        return 1
    text = report.to_csv() if args.format == "csv" else report.to_jsonl()
    if args.output:
        Path(args.output).write_text(text)
        _emit(report.summary())
    else:
        sys.stdout.write(text)
    return 0 if report.violations == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bkpvc", description="Branching k-path vertex covers of forests.")
    parser.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a cover")
    p.add_argument("--forest", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cover", required=True, help="comma-separated ids or @file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="minimum cover")
    p.add_argument("--forest", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use brute force (n <= 18)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bound", help="theorem lower bound")
    p.add_argument("--kind", choices=["directed", "undirected"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="peeling certificate for a cover")
    p.add_argument("--forest", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cover", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reduce", help="undirected forest to rooted directed forest")
    p.add_argument("--forest", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="extremal or random forest")
    p.add_argument("--family", choices=["directed-extremal", "undirected-extremal"])
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--random", action="store_true")
    p.add_argument("--kind", choices=["directed", "undirected"])
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--component-bias", type=float, default=0.1)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("campaign", help="random bound-checking campaign")
    p.add_argument("--kind", choices=["directed", "undirected"], required=True)
    p.add_argument("--n", required=True, help="e.g. 1-60")
    p.add_argument("--k", required=True, help="e.g. 2-5")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extremal", action="store_true", help="add extremal family members")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", help="write the report here, print only the summary")
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BkpvcError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
