"""``chroma-skein`` command-line front end."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .diagram import Diagram, DiagramError, braid_closure, load_diagram, parse_braid_word
from .fuzz import DEFAULT_SEED, run_fuzz
from .oracle import format_s, jones
from .poly import PoleError, SkeinValue, SpecializationError, render, sv_eval, sv_substitute_half
from .skein import (
    MAX_COLORATION_COMPONENTS,
    all_colorations_F,
    deciding_plan,
    evaluate_F,
    partition_label,
)
from .worked_example import run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(args: argparse.Namespace) -> Diagram:
    if args.braid is not None:
        if args.file is not None:
            raise InputError("give either a file or --braid, not both")
        try:
            word = parse_braid_word(args.braid)
            if args.colors:
                colors = [c.strip() for c in args.colors.split(",")]
            else:
                colors = ["a"] * (max((abs(g) for g in word), default=0) + 1)
            return braid_closure(word, colors)
        except DiagramError as exc:
            raise InputError(str(exc)) from None
    if args.file is None:
        raise InputError("no input: give a diagram file or --braid")
    try:
        return load_diagram(args.file)
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    except DiagramError as exc:
        raise InputError(f"{args.file}: {exc}") from None


def _parse_point(text: str) -> tuple[Fraction, Fraction, Fraction]:
    vals = {}
    for item in text.split(","):
        name, sep, raw = item.partition("=")
        name = name.strip()
        if not sep or name not in ("x", "w", "t") or name in vals:
            raise InputError(f"--eval expects x=R,w=R,t=R, got {text!r}")
        try:
            vals[name] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {raw!r}") from None
    if len(vals) != 3:
        raise InputError(f"--eval expects x=R,w=R,t=R, got {text!r}")
    if vals["x"] == 0 or vals["w"] == 0 or vals["t"] == 0:
        raise InputError("x, w and t must be nonzero")
    return vals["x"], vals["w"], vals["t"]


def cmd_compute(args: argparse.Namespace) -> int:
    point = _parse_point(args.eval) if args.eval else None
    d = _load(args)
    value = evaluate_F(d)
    lines = [render(value)]
    if args.jones:
        try:
            lines.append(render(sv_substitute_half(value)))
        except SpecializationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    if point is not None:
        try:
            lines.append(str(sv_eval(value, *point)))
        except PoleError as exc:
            raise InputError(str(exc)) from None
    print("\n".join(lines))
    return EXIT_OK


def cmd_colorations(args: argparse.Namespace) -> int:
    d = _load(args)
    if len(d.components) > MAX_COLORATION_COMPONENTS:
        raise InputError(f"{len(d.components)} components; at most "
                         f"{MAX_COLORATION_COMPONENTS} supported")
    n = len(d.components)
    rows = [(n - len(p), partition_label(p), v) for p, v in all_colorations_F(d).items()]
    for _, label, v in sorted(rows, key=lambda r: (r[0], r[1])):
        print(f"{label} -> {render(v)}")
    return EXIT_OK


def cmd_jones(args: argparse.Namespace) -> int:
    d = _load(args)
    if not d.crossings and not d.components:
        raise InputError("empty diagram")
    print(format_s(jones(d)))
    return EXIT_OK


def cmd_verify_example(args: argparse.Namespace) -> int:
    checks = run_checks(sign_bug=args.inject_sign_bug)
    for c in checks:
        print(c.report())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def _plan_length(d: Diagram) -> SkeinValue:
    # deliberately not an invariant: depends on order and base points
    return SkeinValue(len(deciding_plan(d)))


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.max_crossings < 0 or args.cases < 0:
        raise InputError("--max-crossings and --cases must be non-negative")
    stat = _plan_length if args.inject_noninvariant else None
    report = run_fuzz(args.max_crossings, args.cases, args.seed, statistic=stat)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chroma-skein",
        description="Exact skein invariant of oriented colored link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("file", nargs="?", help="diagram JSON file")
        p.add_argument("--braid", help='braid word, e.g. "s1^-1 s1^-1"; its closure is used')
        p.add_argument("--colors", help="comma-separated color per braid strand (default: one color)")
        return p

    p = with_input(sub.add_parser("compute", help="print F of a diagram"))
    p.add_argument("--jones", action="store_true", help="also print the w = s, t = s^2 specialization")
    p.add_argument("--eval", metavar="x=R,w=R,t=R", help="also print the exact value at a rational point")
    p.set_defaults(func=cmd_compute)

    p = with_input(sub.add_parser("colorations", help="F for every partition of the components"))
    p.set_defaults(func=cmd_colorations)

    p = with_input(sub.add_parser("jones", help="Jones polynomial from the Kauffman bracket"))
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("verify-paper", help="recompute the built-in worked example")
    p.add_argument("--inject-sign-bug", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("fuzz", help="random invariance campaign")
    p.add_argument("--max-crossings", type=int, default=8)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--inject-noninvariant", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
