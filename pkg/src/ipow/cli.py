"""Command-line front end: ``ipow eval|batch|check|bench``.

Exit codes: 0 success (empty results included), 1 containment violations,
2 parse error, 3 semantic error (an infinite singleton exponent).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

from .bench import run_bench
from .exponent import ExponentError
from .interval import (
    EMPTY,
    INF,
    EvalConfig,
    Interval,
    IntervalParseError,
    format_bound,
    format_interval,
    parse_bound,
    parse_bounds,
    parse_interval,
)
from .oracle import check_containment, containment_suite
from .power import pow_full

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3

# schema for one --json result record
RESULT_SCHEMA = {
    "type": "object",
    "oneOf": [
        {
            "properties": {"lo": {"type": "string"}, "hi": {"type": "string"}},
            "required": ["lo", "hi"],
            "additionalProperties": False,
        },
        {
            "properties": {"empty": {"const": True}},
            "required": ["empty"],
            "additionalProperties": False,
        },
    ],
}


def to_json(z: Interval) -> dict:
    if z.is_empty:
        return {"empty": True}
    return {"lo": format_bound(z.lo, hex_mode=True), "hi": format_bound(z.hi, hex_mode=True)}


def exponent_interval(lo: float, hi: float) -> Interval:
    """Build an exponent interval, reporting ``[inf,inf]``/``[-inf,-inf]`` as
    the semantic error it is rather than as malformed input."""
    if lo == hi and lo in (INF, -INF):
        raise ExponentError("infinite singleton exponent")
    return Interval(lo, hi)


def parse_exponent(text: str) -> Interval:
    bounds = parse_bounds(text)
    if bounds is None:
        return EMPTY
    if bounds[0] == bounds[1] and bounds[0] in (INF, -INF):
        raise ExponentError("infinite singleton exponent")
    return parse_interval(text)


def _config(args: argparse.Namespace) -> EvalConfig:
    return EvalConfig(slack_ulps=args.ulps, exact_paths=not args.no_exact)


def _render(z: Interval, args: argparse.Namespace) -> str:
    if args.json:
        return json.dumps(to_json(z))
    return format_interval(z, hex_mode=args.hex)


def cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    try:
        x = parse_interval(args.x)
        y = parse_exponent(args.y)
        z = pow_full(x, y, _config(args))
    except IntervalParseError as exc:
        print(f"ipow: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ExponentError as exc:
        print(f"ipow: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    print(_render(z, args), file=out)
    return EXIT_OK


def _batch_line(z: Interval, args: argparse.Namespace) -> str:
    if args.json:
        return json.dumps(to_json(z))
    if z.is_empty:
        return "empty"
    return f"{format_bound(z.lo, args.hex)} {format_bound(z.hi, args.hex)}"


def cmd_batch(args: argparse.Namespace, inp: TextIO, out: TextIO) -> int:
    """One ``xlo xhi ylo yhi`` query per line; order is preserved.

    A bad line prints ``error <lineno>`` in its place. The exit code is 2 if
    any line was malformed, else 3 if any had an infinite singleton exponent.
    """
    cfg = _config(args)
    malformed = semantic = False
    for lineno, line in enumerate(inp, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            fields = text.split()
            if len(fields) != 4:
                raise IntervalParseError("expected 4 bounds", text)
            xlo, xhi, ylo, yhi = map(parse_bound, fields)
            z = pow_full(Interval(xlo, xhi), exponent_interval(ylo, yhi), cfg)
        except ExponentError as exc:
            semantic, reason = True, str(exc)
        except ValueError as exc:
            malformed, reason = True, str(exc)
        else:
            print(_batch_line(z, args), file=out)
            continue
        print(f"ipow: line {lineno}: {reason}", file=sys.stderr)
        print(f"error {lineno}", file=out)
    if malformed:
        return EXIT_PARSE
    return EXIT_SEMANTIC if semantic else EXIT_OK


_BOX_TOKEN = re.compile(r"\[[^\]]*\]|[^\s\[\]]+")


def parse_box(text: str) -> tuple[Interval, Interval]:
    """``"<x> <y>"`` where each part is an interval literal."""
    parts = _BOX_TOKEN.findall(text)
    if len(parts) != 2:
        raise IntervalParseError("expected two intervals", text)
    return parse_interval(parts[0]), parse_exponent(parts[1])


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _config(args)
    if args.n < 1:
        print("ipow: --n must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    if args.box:
        try:
            x, y = parse_box(args.box)
            report = check_containment(x, y, args.n, args.seed, cfg)
        except IntervalParseError as exc:
            print(f"ipow: parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        except ExponentError as exc:
            print(f"ipow: {exc}", file=sys.stderr)
            return EXIT_SEMANTIC
    else:
        report = containment_suite(args.n, args.seed, cfg)
    if args.json:
        for rec in report.records():
            print(json.dumps(rec), file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    if args.iters < 1:
        print("ipow: --iters must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    rep = run_bench(args.iters, args.seed, args.workload, _config(args))
    if args.json:
        print(json.dumps({"iters": rep.iters, "workload": rep.workload,
                          "pow0_ns": rep.pow0_ns, "full_ns": rep.full_ns,
                          "ratio": rep.ratio}), file=out)
    else:
        print(rep.to_text(), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--hex", action="store_true", help="C99 hex-float bounds")
    common.add_argument("--ulps", type=int, default=2, metavar="K",
                        help="outward slack per inexact corner (default 2)")
    common.add_argument("--no-exact", action="store_true",
                        help="disable exact shortcuts; widen every corner")

    parser = argparse.ArgumentParser(
        prog="ipow", description="Interval power function x**y for arbitrary intervals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one box")
    p.add_argument("x", help="base interval, e.g. '[-2,3]'")
    p.add_argument("y", help="exponent interval, e.g. '[2,2]'")

    p = sub.add_parser("batch", parents=[common], help="evaluate 'xlo xhi ylo yhi' lines")
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)

    p = sub.add_parser("check", parents=[common], help="oracle containment check")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", help="'<x> <y>' interval pair; random boxes if omitted")

    p = sub.add_parser("bench", parents=[common], help="pow_full vs pow0 cost")
    p.add_argument("--iters", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workload", choices=("mixed", "nonneg"), default="mixed")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = out or sys.stdout
    if args.ulps < 0:
        print("ipow: --ulps must be non-negative", file=sys.stderr)
        return EXIT_PARSE
    if args.command == "eval":
        return cmd_eval(args, out)
    if args.command == "batch":
        return cmd_batch(args, args.input, out)
    if args.command == "check":
        return cmd_check(args, out)
    return cmd_bench(args, out)


if __name__ == "__main__":
    sys.exit(main())
