"""Command-line interface.

Exit codes: 0 success, 1 failed check, 2 usage error, 3 resource cap hit.
Caps default from HYPERMCG_WORD_CAP and HYPERMCG_ORDER_CAP; flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import abelian, claims, freegroup
from .freegroup import ResourceCapError
from .oracle import OrderOverflow, default_order_cap, is_identity, oracle_for
from .sphere import selftest_relations
from .words import IndexRangeError, WordSyntaxError, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _genus(value: str) -> int:
    g = int(value)
    if g < 2:
        raise argparse.ArgumentTypeError(f"genus must be >= 2, got {g}")
    return g


def _positive(value: str) -> int:
    k = int(value)
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {k}")
    return k


def format_matrix(m) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in m)


def cmd_verify(args) -> int:
    if args.genus_max < args.genus_min:
        raise UsageError("--genus-max must be >= --genus-min")
    known = {c.id for c in claims.registry()}
    for cid in args.claim or []:
        if cid not in known:
            raise UsageError(f"unknown claim id {cid}")
    reports = claims.run(args.genus_min, args.genus_max, args.claim or None, jobs=args.jobs)
    summary = claims.summarize(reports)
    if args.format == "json":
        print(json.dumps(claims.to_json_obj(reports, args.genus_min, args.genus_max), indent=2))
    else:
        for r in reports:
            line = f"{r.id:<14} g={r.genus}  {r.status.upper():<7}"
            if r.status != "skipped":
                line += f"  expected: {r.expected} | actual: {r.actual}  ({r.ms:.1f} ms)"
            print(line)
        print("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    if summary["fail"]:
        return EXIT_FAIL
    if summary["error"]:
        return EXIT_CAP
    return EXIT_OK


def cmd_eval(args) -> int:
    o = oracle_for(args.genus)
    e = o.evaluate(parse_word(args.word, args.genus))
    info = {
        "genus": args.genus,
        "word": args.word,
        "orientation": e.orient,
        "identity": is_identity(e),
        "equal_rho": o.equal(e, "rho"),
        "central": o.is_central(e),
        "matrix": [list(r) for r in e.mat],
    }
    if args.format == "json":
        print(json.dumps(info))
    else:
        yn = {True: "yes", False: "no"}
        print(f"orientation: {e.orient:+d}")
        print(f"identity: {yn[info['identity']]}")
        print(f"equal to rho: {yn[info['equal_rho']]}")
        print(f"central: {yn[info['central']]}")
        print("matrix:")
        print(format_matrix(e.mat))
    return EXIT_OK


def cmd_order(args) -> int:
    o = oracle_for(args.genus)
    cap = args.cap if args.cap is not None else default_order_cap(args.genus)
    try:
        print(o.order(parse_word(args.word, args.genus), cap))
    except OrderOverflow:
        print(f"exceeds cap {cap}")
        return EXIT_CAP
    return EXIT_OK


def cmd_equal(args) -> int:
    o = oracle_for(args.genus)
    same = o.equal(parse_word(args.lhs, args.genus), parse_word(args.rhs, args.genus))
    print("true" if same else "false")
    return EXIT_OK


def cmd_h1(args) -> int:
    factors = abelian.h1_hyperelliptic(args.genus)
    print(" + ".join("Z" if d == 0 else f"Z_{d}" for d in factors) or "0")
    return EXIT_OK


def cmd_index(args) -> int:
    print(abelian.involution_subgroup_index(args.genus))
    return EXIT_OK


def cmd_selftest(args) -> int:
    o = oracle_for(args.genus)
    results = {f"sphere {k}": v for k, v in selftest_relations(o.table).items()}
    for r in claims.run(args.genus, args.genus, claims.RELATION_IDS):
        results[r.id] = r.status == "pass"
    if args.format == "json":
        print(json.dumps({"genus": args.genus, "results": results}))
    else:
        for k, v in results.items():
            print(f"{k:<28} {'ok' if v else 'FAILED'}")
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypermcg",
                                description="Verify word identities in hyperelliptic mapping class groups.")
    p.add_argument("--word-cap", type=_positive, default=None,
                   help="maximum free word length (default $HYPERMCG_WORD_CAP or 10^6)")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the claim registry")
    v.add_argument("--genus-min", type=_genus, default=2)
    v.add_argument("--genus-max", type=_genus, default=5)
    v.add_argument("--claim", action="append", help="restrict to a claim id (repeatable)")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--jobs", type=_positive, default=1)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a word")
    e.add_argument("--genus", type=_genus, required=True)
    e.add_argument("--word", required=True)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_eval)

    o = sub.add_parser("order", help="order of a word")
    o.add_argument("--genus", type=_genus, required=True)
    o.add_argument("--word", required=True)
    o.add_argument("--cap", type=_positive, default=None)
    o.set_defaults(func=cmd_order)

    q = sub.add_parser("equal", help="decide whether two words are equal")
    q.add_argument("--genus", type=_genus, required=True)
    q.add_argument("--lhs", required=True)
    q.add_argument("--rhs", required=True)
    q.set_defaults(func=cmd_equal)

    h = sub.add_parser("h1", help="abelianization of the hyperelliptic group")
    h.add_argument("--genus", type=_genus, required=True)
    h.set_defaults(func=cmd_h1)

    i = sub.add_parser("index", help="index of the subgroup generated by involutions")
    i.add_argument("--genus", type=_genus, required=True)
    i.set_defaults(func=cmd_index)

    s = sub.add_parser("selftest", help="check the presentation relations")
    s.add_argument("--genus", type=_genus, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.word_cap is not None:
        freegroup.set_word_cap(args.word_cap)
    try:
        return args.func(args)
    except (UsageError, WordSyntaxError, IndexRangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceCapError, OrderOverflow) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
