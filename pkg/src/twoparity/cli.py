"""Command line front end.

    twoparity invariant [--after] [--format text|json] INPUT
    twoparity equal INPUT_A INPUT_B
    twoparity moves [--apply MOVE] INPUT
    twoparity fuzz [--trials N] [--max-chords K] [--seed S] [--kind long|closed] [--c-even]
    twoparity derive INPUT

INPUT is a file path, ``-`` for standard input, or literal Gauss code.
Exit codes: 0 success or equal invariants, 1 distinguished (or fuzz
failures), 2 usage or validation error.

``--format json`` prints one JSON object per line with the same keys as the
text format.
"""

import argparse
import json
import os
import sys

from .fuzz import run_fuzz
from .gauss import GaussCodeError, parse
from .indexing import WindingCountError, derive_indices, parse_windings
from .invariant import InvariantUndefined, compact_invariant, parity_profile, w, w_after
from .moves import (
    InvalidMove, RotateBasepoint, applicable_moves, apply_move, parse_move, rotate_basepoint,
)

EXIT_OK, EXIT_DISTINCT, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def read_input(arg):
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _diagram(text):
    try:
        return parse(text)
    except GaussCodeError as exc:
        raise CliError(f"parse error: {exc}") from None


def _value(d, after=False):
    """w / w_after for long diagrams, orbit canonical form for closed ones."""
    if d.kind == "long":
        return str(w_after(d) if after else w(d))
    if after:
        raise CliError("--after applies to long diagrams only")
    try:
        return str(compact_invariant(d))
    except InvariantUndefined as exc:
        raise CliError(str(exc)) from None


def cmd_invariant(text, after=False):
    d = _diagram(text)
    report = {"command": "invariant", "diagram": str(d)}
    report["invariant"] = "w_after" if after else ("w" if d.kind == "long" else "orbit")
    report["value"] = _value(d, after)
    report["parity"] = parity_profile(d).as_dict()
    return report, EXIT_OK


def cmd_equal(text_a, text_b):
    da, db = _diagram(text_a), _diagram(text_b)
    if da.kind != db.kind:
        raise CliError(f"kind mismatch: {da.kind} vs {db.kind}")
    va, vb = _value(da), _value(db)
    same = va == vb
    report = {"command": "equal", "diagram_a": str(da), "diagram_b": str(db),
              "value_a": va, "value_b": vb,
              "result": "equal-invariant" if same else "distinguished"}
    return report, EXIT_OK if same else EXIT_DISTINCT


def cmd_moves(text, apply=None):
    d = _diagram(text)
    report = {"command": "moves", "diagram": str(d)}
    if apply is None:
        report["moves"] = [str(m) for m in applicable_moves(d)]
        return report, EXIT_OK
    try:
        m = parse_move(apply)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    try:
        if isinstance(m, RotateBasepoint):
            new, effect = rotate_basepoint(d)
            report["rotation_effect"] = str(effect)
        else:
            new = apply_move(d, m)
    except InvalidMove as exc:
        raise CliError(f"invalid move: {exc}") from None
    report.update({"move": str(m), "result": str(new),
                   "w_before": str(w(d)), "w_after_move": str(w(new))})
    return report, EXIT_OK


def cmd_fuzz(trials=1000, max_chords=12, seed=0, kind="long", c_even=False,
             max_length=20, jobs=1):
    summary = run_fuzz(trials, max_chords, seed, kind, c_even, max_length, jobs)
    report = {"command": "fuzz", **summary.as_dict()}
    return report, EXIT_OK if summary.failures == 0 else EXIT_DISTINCT


def cmd_derive(text):
    try:
        wd = parse_windings(text)
        d = derive_indices(wd)
    except (GaussCodeError, WindingCountError, ValueError) as exc:
        raise CliError(str(exc)) from None
    return {"command": "derive", "input": " ".join(text.split()), "diagram": str(d)}, EXIT_OK


def format_report(report, fmt="text"):
    if fmt == "json":
        return json.dumps(report, sort_keys=False)
    lines = []
    for key, val in report.items():
        if isinstance(val, list):
            lines.append(f"{key}:")
            lines += [f"  {v}" for v in val]
        elif isinstance(val, dict):
            lines.append(f"{key}: " + " ".join(f"{k}={v}" for k, v in val.items()))
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(prog="twoparity", description=__doc__.split("\n\n")[0])
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariant", help="w, w_after or compact orbit class")
    s.add_argument("input")
    s.add_argument("--after", action="store_true", help="use the twin w_after")

    s = sub.add_parser("equal", help="compare the invariants of two diagrams")
    s.add_argument("input_a")
    s.add_argument("input_b")

    s = sub.add_parser("moves", help="list or apply moves")
    s.add_argument("input")
    s.add_argument("--apply", metavar="MOVE")

    s = sub.add_parser("fuzz", help="randomised invariance checks")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--max-chords", type=int, default=12)
    s.add_argument("--max-length", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--kind", choices=["long", "closed"], default="long")
    s.add_argument("--c-even", action="store_true")
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("derive", help="indices from torus arc windings")
    s.add_argument("input")

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "invariant":
            report, code = cmd_invariant(read_input(args.input), args.after)
        elif args.command == "equal":
            report, code = cmd_equal(read_input(args.input_a), read_input(args.input_b))
        elif args.command == "moves":
            report, code = cmd_moves(read_input(args.input), args.apply)
        elif args.command == "fuzz":
            if args.trials < 0 or args.max_chords < 0:
                raise CliError("--trials and --max-chords must be >= 0")
            report, code = cmd_fuzz(args.trials, args.max_chords, args.seed, args.kind,
                                    args.c_even, args.max_length, args.jobs)
        else:
            report, code = cmd_derive(read_input(args.input))
    except CliError as exc:
        report = {"command": args.command, "error": str(exc), "status": EXIT_ERROR}
        print(format_report(report, args.format))
        return EXIT_ERROR
    report["status"] = code
    print(format_report(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
