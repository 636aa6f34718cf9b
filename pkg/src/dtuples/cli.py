"""Command-line interface: ``dtuple <command> ...``.

Exit status is 0 on success, 1 on domain errors (bad tuples, incompatible
inputs, corrupt caches) and 2 on usage errors. JSON goes to stdout as a single
document; diagnostics and progress go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Optional, Sequence

from . import bounds, extension, families, search, sieve, tuples
from .arith import primes_upto
from .errors import DTupleError

log = logging.getLogger("dtuples")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _cmd_verify(args) -> int:
    rep = tuples.verify(args.n, args.elements)
    if args.json:
        _emit_json(rep.to_json())
    elif rep.valid:
        print(f"D({args.n}) set {list(rep.elements)}: valid")
        for w in rep.witnesses:
            a, b = rep.elements[w.i], rep.elements[w.j]
            print(f"  {a}*{b}{args.n:+d} = {w.root}^2")
    else:
        a, b = rep.failing_pair
        print(f"D({args.n}) set {list(rep.elements)}: invalid, {a}*{b}{args.n:+d} is not a square")
    return 0


def _cmd_extend(args) -> int:
    elems = sorted(args.elements)
    if len(elems) == 2:
        ext = tuples.pair_regular_extension(elems[0], elems[1], args.n)
        out = {
            "n": args.n,
            "pair": elems,
            "s": ext.s,
            "d": ext.d,
            "witnesses": [ext.root_a, ext.root_c],
            "exceeds_c": ext.exceeds,
        }
    elif len(elems) == 3:
        data = extension.compute_e(elems, args.n)
        out = {
            "n": args.n,
            "triple": elems,
            "r": data.r,
            "s": data.s,
            "t": data.t,
            "e": data.e,
            "x": data.x,
            "y": data.y,
            "z": data.z,
            "fourth": extension.regular_fourth(elems, args.n),
        }
    else:
        raise DTupleError("extend takes two or three elements")
    if args.json:
        _emit_json(out)
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0


def _cmd_solve(args) -> int:
    xs = sieve.solve_system(args.prefix, args.n, args.max)
    if args.json:
        _emit_json(xs)
    else:
        print("\n".join(map(str, xs)))
    return 0


def _cmd_maxtuple(args) -> int:
    rep = search.max_tuple(args.n, args.max)
    print(f"n={rep.n} N={rep.N}: {rep.elapsed * 1000:.0f} ms", file=sys.stderr)
    if args.json:
        # timing stays on stderr so that identical runs print identical JSON
        _emit_json(rep.to_json(timing=False))
    else:
        print(f"max size {rep.max_size} in [1, {rep.N}] for D({rep.n}): {list(rep.witness.elements)}")
        print(f"pairs {rep.pairs_found}, search nodes {rep.nodes_explored}")
    return 0


def _cmd_scan(args) -> int:
    jobs = args.jobs if args.jobs is not None else search.default_jobs()

    def progress(rec: search.ScanRecord) -> None:
        print(f"n={rec.n} C={rec.c} witness={list(rec.witness)} {rec.ms} ms", file=sys.stderr, flush=True)

    recs = search.cn_scan(args.n_from, args.n_to, args.cache, jobs=jobs, progress=progress)
    if args.json:
        _emit_json([{"n": r.n, "N": r.N, "c": r.c, "witness": list(r.witness)} for r in recs])
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "N", "c", "witness"])
        for r in recs:
            w.writerow([r.n, r.N, r.c, " ".join(map(str, r.witness))])
    else:
        for r in recs:
            print(f"{r.n}\t{r.c}\t{list(r.witness)}")
    return 0


def _cmd_bounds(args) -> int:
    rep = bounds.theorem_bounds(args.n)
    if args.json:
        _emit_json(rep.to_json())
    else:
        for k, v in rep.to_json().items():
            print(f"{k}: {v}")
    return 0


def _cmd_gp(args) -> int:
    primes = [p for p in primes_upto(args.pmax) if p >= max(args.pmin, 3)]
    rows = sieve.g_table(args.prefix, args.n, primes)
    if args.json:
        _emit_json(rows)
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["p", "g", "bound_0722", "ok"])
        for row in rows:
            w.writerow([row["p"], row["g"], f"{row['bound_0722']:.6f}", str(row["ok"]).lower()])
    return 0


def _cmd_families(args) -> int:
    # always JSON: DTuple objects in their canonical form
    if args.list:
        out = [f.to_json() for f in families.catalog()]
    else:
        if args.k is None:
            raise DTupleError("--gen needs --k")
        out = families.GENERATORS[args.gen](args.k).to_json()
    _emit_json(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtuple", description="Diophantine m-tuples with the property D(n).")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--json", action="store_true", help="JSON on stdout")
        mode.add_argument("--csv", action="store_true", help="CSV on stdout")
        return p

    p = add("verify", _cmd_verify, "check that a set has the property D(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("elements", type=int, nargs="+")

    p = add("extend", _cmd_extend, "regular extension of a pair or triple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("elements", type=int, nargs="+")

    p = add("solve", _cmd_solve, "all x <= MAX with a_i x + n square for every prefix element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("prefix", type=int, nargs="+")

    p = add("maxtuple", _cmd_maxtuple, "largest D(n) set inside [1, MAX]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)

    p = add("scan", _cmd_scan, "C_n for every n in a range, with a resumable JSONL cache")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $DTUPLE_JOBS or core count)")

    p = add("bounds", _cmd_bounds, "evaluate the closed-form size bounds for n")
    p.add_argument("--n", type=int, required=True)

    p = add("gp", _cmd_gp, "table of admissible residue counts g(p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pmin", type=int, default=83)
    p.add_argument("--pmax", type=int, default=499)
    p.add_argument("prefix", type=int, nargs="+")

    p = add("families", _cmd_families, "catalog fixtures and parametric families")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--list", action="store_true")
    which.add_argument("--gen", choices=sorted(families.GENERATORS))
    p.add_argument("--k", type=int)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except DTupleError as exc:
        print(f"dtuple {args.command}: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
