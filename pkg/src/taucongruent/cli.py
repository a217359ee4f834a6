"""Command-line front end.

    taucongruent tau --tau 1/2 --x 2
    taucongruent integer-points --tau 1
    taucongruent ellipse --axis 2 --count 5
    taucongruent circumcircle --radius 5/2 --t 1/2
    taucongruent excircle --kind c --sides 3,4,5
    taucongruent tables
    taucongruent tau --tau 3 --count 20 | taucongruent verify

Exit status: 0 on success, 1 if any record fails verification, 2 on usage
errors (malformed input, parameters outside their domain).
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, List, Optional

from . import records as rec
from . import tau_curve
from .errors import TauCongruentError
from .exact_arith import format_rat, parse_rat
from .tables import format_tables
from .triangles import RightTriangle

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2


def _rat(text: str):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sides(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--sides needs three comma-separated rationals")
    return tuple(_rat(p) for p in parts)


def _count(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--count must be at least 1")
    return n


def _text_line(r: rec.OutputRecord) -> str:
    params = " ".join(f"{k}={v if isinstance(v, str) else format_rat(v)}" for k, v in r.parameters.items())
    if r.degenerate:
        return f"{r.family} {params}  degenerate (no triangle)"
    sides = ", ".join(format_rat(s) for s in r.sides)
    status = "verified" if r.verified else "FAILED"
    return f"{r.family} {params}  sides ({sides})  area {format_rat(r.area)}  class {r.cls}  {status}"


def _emit(records: Iterable[rec.OutputRecord], fmt: str, distinct: bool = False) -> int:
    seen = set()
    ok = True
    for r in records:
        if distinct and not r.degenerate:
            if r.cls in seen:
                continue
            seen.add(r.cls)
        ok &= r.verified
        print(r.to_json() if fmt == "records" else _text_line(r))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _values_or_count(args, values):
    return (values, None) if values else (None, args.count)


def cmd_tau(args) -> int:
    xs, count = _values_or_count(args, args.x)
    records = list(rec.tau_records(args.tau, xs, count))
    return _emit(records, args.format, args.distinct_classes)


def cmd_integer_points(args) -> int:
    points = sorted(tau_curve.integer_points(args.tau), key=lambda p: (p.x, p.y))
    if args.format == "records":
        for p in points:
            print(f'{{"x": "{format_rat(p.x)}", "y": "{format_rat(p.y)}"}}')
    else:
        print(" ".join(f"({format_rat(p.x)},{format_rat(p.y)})" for p in points))
    return EXIT_OK


def cmd_ellipse(args) -> int:
    ts, count = _values_or_count(args, args.t)
    return _emit(list(rec.ellipse_records(args.axis, ts, count)), args.format, args.distinct_classes)


def cmd_circumcircle(args) -> int:
    ts, count = _values_or_count(args, args.t)
    return _emit(list(rec.circumcircle_records(args.radius, ts, count)), args.format, args.distinct_classes)


def cmd_excircle(args) -> int:
    if args.sides:
        records = [rec.normalized_excircle_record(RightTriangle(*s), args.kind) for s in args.sides]
    else:
        xs, count = _values_or_count(args, args.x)
        records = list(rec.excircle_records(args.kind, xs, count))
    return _emit(records, args.format, args.distinct_classes)


def cmd_tables(args) -> int:
    sys.stdout.write(format_tables())
    return EXIT_OK


def cmd_verify(args) -> int:
    status = EXIT_OK
    for lineno, line in enumerate(args.input, start=1):
        if not line.strip():
            continue
        try:
            r = rec.OutputRecord.from_json(line)
        except ValueError as exc:
            print(f"line {lineno}: parse error: {exc}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        failures = rec.check_record(r)
        if failures:
            print(f"line {lineno}: {'; '.join(failures)}", file=sys.stderr)
            if status == EXIT_OK:
                status = EXIT_VERIFY_FAILED
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taucongruent",
        description="Exact rational triangles and their (tau-)congruent numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def generator(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--count", type=_count, default=10, help="number of height-ordered samples (default 10)")
        p.add_argument("--format", choices=("text", "records"), default="records")
        p.add_argument("--distinct-classes", action="store_true", help="keep only the first record per class")
        return p

    p = generator("tau", "Heron triangles with angle 2*arctan(tau) around the unit circle")
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--x", type=_rat, action="append", help="x coordinate on X_tau (repeatable)")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("integer-points", help="integer points of X_tau for 1/tau a positive integer")
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_integer_points)

    p = generator("ellipse", "right triangles circumscribing the ellipse E_axis")
    p.add_argument("--axis", type=_rat, default=parse_rat("1"))
    p.add_argument("--t", type=_rat, action="append", help="curve parameter t > 0 (repeatable)")
    p.set_defaults(func=cmd_ellipse)

    p = generator("circumcircle", "right triangles inscribed in a circle of radius R")
    p.add_argument("--radius", type=_rat, default=parse_rat("1"))
    p.add_argument("--t", type=_rat, action="append", help="parameter t in (0, 1) (repeatable)")
    p.set_defaults(func=cmd_circumcircle)

    p = generator("excircle", "right triangles with unit exradius")
    p.add_argument("--kind", choices=("a", "b", "c"), type=str.lower, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--x", type=_rat, action="append", help="parameter x in (0, 1) (repeatable)")
    group.add_argument("--sides", type=_sides, action="append", help="right triangle a,b,c to normalize (repeatable)")
    p.set_defaults(func=cmd_excircle)

    p = sub.add_parser("tables", help="recompute the summary tables")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="re-check a record stream read from standard input")
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TauCongruentError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
