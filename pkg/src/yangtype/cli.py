"""Command-line front-end.

Subcommands:
    stable  -- print (and optionally write) the universal commutation relation
               for a word pair, in JSON
    verify  -- run a named verification suite; exit 1 on any failure
    lift    -- print the PBW dump of a lifted element

Exit codes: 0 success, 1 verification failure, 2 usage error.  The default
random seed can be set through the YANGTYPE_SEED environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import lift, stable, suites
from .words import parse_word


def _default_seed():
    try:
        return int(os.environ.get("YANGTYPE_SEED", "0"))
    except ValueError:
        return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="yangtype")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stable", help="universal commutation relation for a word pair")
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--wt", required=True)
    sp.add_argument("--form", type=int, default=1, choices=(1, 2, 3, 4))
    sp.add_argument("--normal", action="store_true",
                    help="normal-order the quadratic terms")
    sp.add_argument("--json", metavar="PATH", default=None,
                    help="also write the relation to this file")

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("--suite", required=True, choices=sorted(suites.SUITES))
    vp.add_argument("--L", type=int, default=2)
    vp.add_argument("--max-len", type=int, default=3, dest="max_len")
    vp.add_argument("--max-total", type=int, default=4, dest="max_total")
    vp.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    vp.add_argument("--N", type=int, nargs="+", default=[3, 4])
    vp.add_argument("--s", type=int, nargs="+", default=[0, 1, -2])
    vp.add_argument("--seed", type=int, default=_default_seed())

    lp = sub.add_parser("lift", help="print a lifted element")
    lp.add_argument("--L", type=int, required=True)
    lp.add_argument("--w", required=True)
    lp.add_argument("--i", type=int, required=True)
    lp.add_argument("--j", type=int, required=True)
    lp.add_argument("--N", type=int, required=True)
    lp.add_argument("--s", required=True,
                    help="rational parameter value, e.g. 0, -2, 3/2")
    lp.add_argument("--shifted", action="store_true")
    return ap


def cmd_stable(args):
    try:
        w = parse_word(args.w, args.L)
        wt = parse_word(args.wt, args.L)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rel = stable.stable_comm(args.L, w, wt, args.form)
    if args.normal:
        rel = stable.normalize_relation(args.L, rel, len(w) + len(wt))
    text = stable.dumps_relation(args.L, w, wt, args.form, rel)
    print(text)
    if args.json:
        with open(args.json, "w") as f:
            f.write(text + "\n")
    return 0


def cmd_verify(args):
    failures = suites.SUITES[args.suite](args)
    for line in failures:
        print(f"FAIL: {line}")
    if failures:
        print(f"suite {args.suite}: {len(failures)} failure(s)")
        return 1
    print(f"suite {args.suite}: ok")
    return 0


def cmd_lift(args):
    try:
        w = parse_word(args.w, args.L)
        s = Fraction(args.s)
        if not (1 <= args.i <= args.N and 1 <= args.j <= args.N):
            raise ValueError("indices must be within 1..N")
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    elem = lift.lift_t(args.i, args.j, w, args.N, s, shifted=args.shifted)
    print(elem.dump())
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"stable": cmd_stable, "verify": cmd_verify, "lift": cmd_lift}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
