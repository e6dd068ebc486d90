"""Command line interface: analyze a pencil, run verification suites,
or emit corpus items.

Exit codes: 0 success, 1 failed verification, 2 parse error,
3 precondition violation, 4 internal assertion failure.
"""

import argparse
import json
import random
import sys
import time

from .gao import CommonFactorError
from .parser import ParseError, parse_polynomial, unparse
from .pencil import (
    CompositePencilError,
    SpecialPencilDowngrade,
    analyze_sets,
    normalize,
)
from .ranks import rank_report
from .report import build_report, poly_from_json, poly_to_json, render_json, render_text
from .verify import run_suite

ALL_SETS = ("singset", "multset", "redset", "primset", "uniset")


def _load_poly(spec, varnames):
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            text = fh.read().strip()
        if text.startswith("{"):
            return poly_from_json(json.loads(text)), text
        return parse_polynomial(text, varnames), text
    return parse_polynomial(spec, varnames), spec


def cmd_analyze(args):
    varnames = tuple(args.vars.split(","))
    if len(varnames) != 2 or varnames[0] == varnames[1]:
        print("error: --vars needs two distinct names", file=sys.stderr)
        return 2
    try:
        f, ftext = _load_poly(args.f, varnames)
        w = None
        wtext = None
        if args.w:
            w, wtext = _load_poly(args.w, varnames)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    random.seed(args.seed)
    which = ALL_SETS if args.sets == "all" else tuple(
        s.strip() for s in args.sets.split(",") if s.strip()
    )
    unknown = [s for s in which if s not in ALL_SETS]
    if unknown:
        print("error: unknown sets %s" % ", ".join(unknown), file=sys.stderr)
        return 2
    t0 = time.time()
    try:
        pencil = normalize(f, w)
    except (CommonFactorError, SpecialPencilDowngrade, ArithmeticError) as exc:
        print("precondition violation: %s" % exc, file=sys.stderr)
        return 3
    try:
        sets = analyze_sets(pencil, which=which, seed=args.seed)
    except CompositePencilError as exc:
        print("composite pencil: %s" % exc, file=sys.stderr)
        return 3
    rrep = None
    if args.rank == "on":
        if w is not None:
            print(
                "precondition violation: rank formulas cover the special "
                "pencil only (omit --w)", file=sys.stderr)
            return 3
        try:
            rrep = rank_report(f, seed=args.seed)
        except AssertionError as exc:
            print("internal assertion failure: %s" % exc, file=sys.stderr)
            return 4
        if rrep.zeta != -1 or rrep.jungian_residual != 0:
            print(
                "internal assertion failure: zeta=%s residual=%s"
                % (rrep.zeta, rrep.jungian_residual), file=sys.stderr)
            return 4
    doc = build_report(
        pencil, sets, rrep,
        timing={"seconds": round(time.time() - t0, 3)} if args.timing else None,
        input_text={"f": ftext, "w": wtext},
    )
    out = render_json(doc) if args.format == "json" else render_text(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    else:
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_verify(args):
    try:
        rows = run_suite(args.suite, seed=args.seed)
    except KeyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    width = max(len(r[0]) for r in rows) + 2
    failed = 0
    for name, ok, detail in rows:
        status = "pass" if ok else "FAIL"
        if not ok:
            failed += 1
        print("%-*s %s  %s" % (width, name, status, detail))
    print("---")
    print("%d checks, %d failed" % (len(rows), failed))
    return 1 if failed else 0


def cmd_corpus(args):
    from .corpus import gen_klein, gen_structured_random, standard_items

    items = standard_items() + [gen_klein()]
    if args.seed is not None:
        items.append(gen_structured_random(args.seed))
    if args.list:
        for item in items:
            print(item.identifier)
        return 0
    target = [i for i in items if i.identifier == args.emit]
    if not target:
        print("error: unknown corpus item %r" % args.emit, file=sys.stderr)
        return 2
    item = target[0]
    doc = {
        "identifier": item.identifier,
        "f": poly_to_json(item.f),
        "w": poly_to_json(item.w) if item.w is not None else None,
        "f_text": unparse(item.f),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="pencil-lab",
        description="Exact invariants of pencils of plane algebraic curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="compute invariant sets and ranks")
    pa.add_argument("--f", required=True, help="polynomial expression or @file")
    pa.add_argument("--w", default=None, help="general pencil denominator")
    pa.add_argument("--vars", default="X,Y", help="variable names (default X,Y)")
    pa.add_argument("--sets", default="all",
                    help="all or a comma list of %s" % ",".join(ALL_SETS))
    pa.add_argument("--rank", choices=("on", "off"), default="off")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.add_argument("--out", default=None)
    pa.add_argument("--timing", action="store_true",
                    help="include wall-clock timing (breaks byte determinism)")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=("paper-examples", "identities", "oracles", "all"))
    pv.add_argument("--seed", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("corpus", help="list or emit built-in corpus items")
    pc.add_argument("--list", action="store_true")
    pc.add_argument("--emit", default=None)
    pc.add_argument("--seed", type=int, default=None,
                    help="also include one structured random item")
    pc.set_defaults(func=cmd_corpus)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
