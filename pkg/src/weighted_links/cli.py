"""Command-line front end.

    weighted-links analyze --weights 1,2,3,5 --degree 10 --format json
    weighted-links scan --max-weight 7 --index 1 --b2 8 --format csv

Exit codes: 0 success (unclassified results included), 2 invalid
arguments, 3 computation diagnostics (non-integral Milnor number or
divisor) from ``analyze``.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .classify import ScanQuery, analyze, scan
from .exact import DomainError
from .report import render
from .wps import make_weights

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DIAGNOSTIC = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class UsageError(Exception):
    pass


def _weight_list(text: str):
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weighted-links", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="invariants of a single link")
    p.add_argument("--weights", required=True, type=_weight_list, help="w0,w1,w2,w3")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int, help="weighted degree d")
    g.add_argument("--index", type=int, help="Fano index I; d = |w| - I")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")

    s = sub.add_parser("scan", help="analyze all ascending weight tuples up to a bound")
    s.add_argument("--max-weight", required=True, type=int)
    s.add_argument("--index", type=int, action="append", dest="indices",
                   help="Fano index (repeatable, default 1)")
    s.add_argument("--b2", type=int, default=None, help="keep only links with this b2")
    wf = s.add_mutually_exclusive_group()
    wf.add_argument("--well-formed-only", dest="well_formed_only", action="store_true", default=True)
    wf.add_argument("--all", dest="well_formed_only", action="store_false")
    s.add_argument("--format", choices=["table", "json", "csv"], default="table")
    s.add_argument("--out", default=None, help="write to FILE instead of stdout")
    return parser


def cmd_analyze(args, out, err) -> int:
    try:
        w = make_weights(args.weights)
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    d = args.degree if args.degree is not None else w.total - args.index
    if d < 1:
        print(f"error: degree must be positive, got {d}", file=err)
        return EXIT_USAGE
    report = analyze(w, d)
    out.write(render([report], args.format))
    if report.computation_failed:
        for line in report.diagnostics[:2]:
            print(f"diagnostic: {line}", file=err)
        return EXIT_DIAGNOSTIC
    return EXIT_OK


def cmd_scan(args, out, err) -> int:
    indices = args.indices or [1]
    try:
        query = ScanQuery(
            max_weight=args.max_weight,
            fano_indices=frozenset(indices),
            filter_b2=args.b2,
            require_well_formed=args.well_formed_only,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    reports = scan(query)
    text = render(reports, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(f"{len(reports)} matching link(s)", file=err)
    return EXIT_OK


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.command == "analyze":
        return cmd_analyze(args, out, err)
    return cmd_scan(args, out, err)


def run():
    sys.exit(main())
