"""Command-line surface for batch computation and verification sweeps.

Exit codes: 0 success/verified, 1 verification failure (the counterexample is
printed), 2 usage or domain error.  Output is deterministic: identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import family, series, verify
from .growth import ball_growth, word_growth
from .machine import GuardExceeded, parse_machine
from .madic import act_on_integer


def _growth_table(args):
    if args.machine is not None:
        if args.method != "bfs":
            raise ValueError("--machine supports only --method bfs")
        with open(args.machine, encoding="ascii") as fh:
            machine = parse_machine(fh.read())
        if machine.m != args.m:
            raise ValueError(f"--m {args.m} does not match machine alphabet {machine.m}")
        gens = tuple(range(machine.n))
    else:
        machine = family.mask_successor_machine(args.m)
        gens = (0, 1, 2)
    compute_bfs = ball_growth if args.kind == "ball" else word_growth

    tables = {}
    if args.method in ("bfs", "all"):
        tables["bfs"] = compute_bfs(machine, gens, args.max_n).values
    if args.method in ("recurrence", "all"):
        table = (series.ball_growth_recurrence if args.kind == "ball"
                 else series.word_growth_recurrence)(args.m, args.max_n)
        tables["recurrence"] = table.values
    if args.method in ("series", "all"):
        table = (series.ball_growth_series if args.kind == "ball"
                 else series.word_growth_series)(args.m, args.max_n)
        tables["series"] = table.values
    return tables


def cmd_growth(args):
    tables = _growth_table(args)
    methods = list(tables)
    mismatch = None
    if len(methods) > 1:
        reference = tables[methods[0]]
        for name in methods[1:]:
            if tables[name] != reference:
                mismatch = next(n for n, (a, b) in
                                enumerate(zip(reference, tables[name])) if a != b)
                break
    if args.format == "json":
        print(json.dumps({
            "m": args.m,
            "kind": args.kind,
            "tables": {name: list(vals) for name, vals in tables.items()},
            "agree": mismatch is None,
        }, separators=(",", ":")))
    else:
        print("n," + ",".join(methods))
        for n in range(args.max_n + 1):
            print(f"{n}," + ",".join(str(tables[name][n]) for name in methods))
        if len(methods) > 1:
            print("agreement," + ("exact" if mismatch is None else f"first mismatch at n={mismatch}"))
    if mismatch is not None:
        print(f"growth tables disagree first at n={mismatch}", file=sys.stderr)
        return 1
    return 0


def cmd_reduce(args):
    word = family.parse_word(args.m, args.word)
    nf = family.reduce_word(word)
    print(nf.to_json())
    print(nf.to_word().to_string())
    return 0


def cmd_wordproblem(args):
    left = family.reduce_word(family.parse_word(args.m, args.left))
    right = family.reduce_word(family.parse_word(args.m, args.right))
    if left == right:
        print("equal")
        return 0
    print(f"distinct: {left.to_json()} vs {right.to_json()}")
    return 1


def cmd_relations(args):
    failures = []
    for k in range(args.max_k + 1):
        for p in range(1, args.m):
            lhs, rhs = family.absorption_relation(args.m, k, p)
            ok = family.word_element(lhs).key == family.word_element(rhs).key
            print(f"absorb(k={k},p={p}): {'ok' if ok else 'FAIL'}")
            if not ok:
                failures.append(("absorb", k, p))
        lhs, rhs = family.carry_relation(args.m, k)
        ok = family.word_element(lhs).key == family.word_element(rhs).key
        print(f"carry(k={k}): {'ok' if ok else 'FAIL'}")
        if not ok:
            failures.append(("carry", k, None))
    if args.general is not None:
        ps = [int(tok) for tok in args.general.split(",")]
        if len(ps) < 2:
            raise ValueError("--general needs at least two parameters")
        k = len(ps) - 2
        lhs, rhs = family.prefix_relation(args.m, k, ps)
        ok = family.word_element(lhs).key == family.word_element(rhs).key
        print(f"general(k={k},ps={ps}): {'ok' if ok else 'FAIL'}")
        if not ok:
            failures.append(("general", k, tuple(ps)))
    if failures:
        print(f"failed: {failures[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_series(args):
    s, delta, gamma = series.series_coefficients(args.m, args.max_n)
    if args.format == "json":
        print(json.dumps({"m": args.m, "S": list(s.coeffs), "Delta": list(delta.coeffs),
                          "Gamma": list(gamma.coeffs)}, separators=(",", ":")))
    else:
        print("n,S,Delta,Gamma")
        for n in range(args.max_n + 1):
            print(f"{n},{s.coeffs[n]},{delta.coeffs[n]},{gamma.coeffs[n]}")
    return 0


def cmd_partitions(args):
    if args.n is not None:
        print(series.sequential_power_partitions(args.n, args.m))
        return 0
    values = series.sequential_partition_values(args.m, args.max_n)
    if args.format == "json":
        print(json.dumps({"m": args.m, "counts": values[1:]}, separators=(",", ":")))
        return 0
    print("n,count")
    for n in range(1, args.max_n + 1):
        print(f"{n},{values[n]}")
    return 0


def cmd_act(args):
    word = family.parse_word(args.m, args.word)
    print(act_on_integer(word, args.input))
    return 0


def cmd_cayley(args):
    if (args.block is None) == (args.radius is None):
        raise ValueError("exactly one of --block or --radius is required")
    if args.block is not None:
        print(family.cayley_block(args.m, args.block).to_dot(), end="")
    else:
        print(family.cayley_ball(args.m, args.radius).to_dot(), end="")
    return 0


def cmd_limits(args):
    quadratic = [series.quadratic_limit_growth(n) for n in range(args.max_n + 1)]
    linear = [series.linear_limit_growth(n) for n in range(args.max_n + 1)]
    if args.format == "json":
        print(json.dumps({"quadratic": quadratic, "linear": linear},
                         separators=(",", ":")))
        return 0
    print("n,quadratic,linear")
    for n in range(args.max_n + 1):
        print(f"{n},{quadratic[n]},{linear[n]}")
    return 0


def cmd_asymptotics(args):
    points = [int(tok) for tok in args.points.split(",")]
    rows = [(n, series.mahler_pointwise_estimate(args.m, n),
             series.growth_exponent_diagnostic(args.m, n)) for n in points]
    if args.format == "json":
        print(json.dumps({"m": args.m, "points": [
            {"N": n, "scale_estimate": scale, "slope_diagnostic": slope}
            for n, scale, slope in rows]}, separators=(",", ":")))
        return 0
    print("N,scale_estimate,slope_diagnostic")
    for n, scale, slope in rows:
        print(f"{n},{scale!r},{slope!r}")
    return 0


def cmd_verify_all(args):
    return 0 if verify.run_all() else 1


def _add_m(parser, required=True):
    parser.add_argument("--m", type=int, required=required,
                        help="alphabet size (>= 2)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mealygrowth",
        description="Mealy transducer growth toolkit for the mask/successor family")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("growth", help="growth tables by BFS, recurrence and series")
    _add_m(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--method", choices=("bfs", "recurrence", "series", "all"),
                   default="all")
    p.add_argument("--kind", choices=("ball", "word"), default="ball")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--machine", help="machine text file (bfs only, all states generate)")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("reduce", help="normal form of a generator word")
    _add_m(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("wordproblem", help="decide equality of two words")
    _add_m(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_wordproblem)

    p = sub.add_parser("relations", help="verify the defining relations")
    _add_m(p)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--general", help="comma list p_(k+2),...,p_1 of one general relation")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("series", help="coefficients of the growth series")
    _add_m(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("partitions", help="sequential-power partition counts")
    _add_m(p)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("act", help="act on an integer with a generator word")
    _add_m(p)
    p.add_argument("--word", required=True)
    p.add_argument("--input", type=int, required=True)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("cayley", help="DOT export of Cayley blocks or balls")
    _add_m(p)
    p.add_argument("--block", type=int)
    p.add_argument("--radius", type=int)
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("limits", help="closed-form limit growth tables")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("asymptotics", help="growth scale estimates and diagnostics")
    _add_m(p)
    p.add_argument("--points", default="1000,10000,100000,1000000",
                   help="comma list of N values")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("verify-all", help="run the full acceptance sweep")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, GuardExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
