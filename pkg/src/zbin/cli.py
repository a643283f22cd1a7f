"""Command line: ``zbin {classify,box,center,verify,linear}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or
scope errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from math import comb
from typing import List, Optional

from . import center as C
from . import linear as L
from . import verify as V
from .groupoid import (
    GroupoidError,
    associativity_witness,
    box,
    has_orientation_property,
    is_commutative,
    is_idempotent,
    is_left_zero,
    is_right_zero,
    is_travel_groupoid,
)
from .textio import ParseError, inline_table, parse_table, render_mask, render_table, render_tables


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str):
    try:
        return parse_table(_read(path))
    except (ParseError, GroupoidError) as e:
        raise UsageError(f"{path}: {e}") from None


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def classify_lines(g) -> List[str]:
    n = g.order
    lines = [f"order: {n}",
             f"idempotent: {_yes(is_idempotent(g))}",
             f"commutative: {_yes(is_commutative(g))}"]
    w = associativity_witness(g)
    if w is None:
        lines.append("associative: yes")
    else:
        x, y, z = w
        lines.append(f"associative: no (witness {x} {y} {z}: "
                     f"({x}*{y})*{z} = {g(g(x, y), z)}, {x}*({y}*{z}) = {g(x, g(y, z))})")
    lines += [f"left-zero: {_yes(is_left_zero(g))}",
              f"right-zero: {_yes(is_right_zero(g))}",
              f"orientation: {_yes(has_orientation_property(g))}",
              f"travel: {_yes(is_travel_groupoid(g))}"]
    lz = C.is_locally_zero(g)
    lines.append(f"locally-zero: {_yes(lz)}")
    if lz:
        lines.append(f"mask: {C.to_mask(g)}")
    if n <= C.BRUTEFORCE_MAX_ORDER:
        h, _ = C.center_witness(g)
        how = "brute force"
    else:
        h, _ = C.sampled_center_witness(g, trials=100, seed=0)
        how = "sampled screen"
    if h is None:
        lines.append(f"center: yes ({how})")
    else:
        lines.append(f"center: no ({how}; witness {inline_table(h)})")
    return lines


def cmd_classify(args) -> int:
    g = _load(args.file)
    with _output(args.output) as out:
        out.write("\n".join(classify_lines(g)) + "\n")
    return 0


def cmd_box(args) -> int:
    a = _load(args.first)
    b = _load(args.second)
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} vs {b.order}")
    with _output(args.output) as out:
        out.write(render_table(box(a, b)))
    return 0


def cmd_center(args) -> int:
    n = args.n
    try:
        if args.action == "enumerate":
            if args.masks:
                text = "".join(render_mask(m) + "\n" for m in C.enumerate_masks(n))
            else:
                text = render_tables(C.enumerate_locally_zero(n))
        elif args.action == "count":
            if n < 1:
                raise UsageError(f"order must be positive, got {n}")
            total = 2 ** comb(n, 2)
            if args.iso:
                text = f"total: {total}\nclasses: {C.count_iso_classes(n)}\n"
            else:
                text = f"{total}\n"
        else:
            members = sorted(C.center_bruteforce(n))
            if args.masks:
                text = "".join(render_mask(C.to_mask(g)) + "\n" for g in members)
            else:
                text = render_tables(members)
    except C.CenterError as e:
        raise UsageError(str(e)) from None
    with _output(args.output) as out:
        out.write(text)
    return 0


def _fmt(value) -> str:
    if hasattr(value, "table"):
        return inline_table(value)
    if isinstance(value, L.LinearCoeffs):
        return f"({value.a},{value.b},{value.c}) mod {value.modulus}"
    if isinstance(value, set):
        return "{" + ", ".join(map(str, sorted(value))) + "}"
    return str(value)


def report_lines(r: V.TheoremReport) -> List[str]:
    head = [f"{'PASS' if r.passed else 'FAIL'} {r.id} n={r.order} {r.mode} cases={r.cases_checked}"]
    if r.seed is not None:
        head.append(f"seed={r.seed}")
    head += [f"{k}={_fmt(v)}" for k, v in r.details.items()]
    lines = [" ".join(head)]
    cx = r.counterexample
    if cx is not None:
        lines.append(f"  law: {cx.law}")
        lines += [f"  {k}: {_fmt(v)}" for k, v in cx.inputs.items()]
        lines += [f"  lhs: {_fmt(cx.lhs)}", f"  rhs: {_fmt(cx.rhs)}"]
    return lines


def cmd_verify(args) -> int:
    try:
        if args.id == "all":
            reports = V.run_all(args.n, seed=args.seed, budget=args.sample)
        else:
            mode = V.Mode.SAMPLED if args.sample is not None else V.Mode.EXHAUSTIVE
            reports = [V.run_check(args.id, args.n, mode, args.sample, args.seed)]
    except V.InfeasibleCheck as e:
        raise UsageError(str(e)) from None
    lines = [ln for r in reports for ln in report_lines(r)]
    failed = sum(not r.passed for r in reports)
    if len(reports) > 1:
        lines.append(f"{len(reports)} checks, {len(reports) - failed} passed, {failed} failed")
    with _output(args.output) as out:
        out.write("\n".join(lines) + "\n")
    return 1 if failed else 0


def cmd_linear(args) -> int:
    m = args.mod
    if m < 1:
        raise UsageError(f"--mod must be >= 1, got {m}")
    a, b, c, d, e, f = args.coeffs
    got = L.compose(L.LinearCoeffs.reduced(m, a, b, c), L.LinearCoeffs.reduced(m, d, e, f))
    with _output(args.output) as out:
        out.write(f"{got.a} {got.b} {got.c}\n")
    return 0


def _theorem_id(text: str) -> str:
    if text != "all" and text not in {t.value for t in V.TheoremId}:
        raise argparse.ArgumentTypeError(
            f"unknown id {text!r}; choose 'all' or one of {', '.join(t.value for t in V.TheoremId)}")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zbin", description="Finite groupoids under the box product.")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[out], help="report the properties of a table")
    p.add_argument("file", help="table file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("box", parents=[out], help="print first □ second")
    p.add_argument("first", help="inner operation table")
    p.add_argument("second", help="outer operation table")
    p.set_defaults(func=cmd_box)

    p = sub.add_parser("center", parents=[out], help="locally-zero groupoids and the center")
    p.add_argument("action", choices=["enumerate", "count", "bruteforce"])
    p.add_argument("n", type=int)
    p.add_argument("--masks", action="store_true", help="print masks instead of tables")
    p.add_argument("--iso", action="store_true", help="also count isomorphism classes")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("verify", parents=[out], help="run theorem checks")
    p.add_argument("id", type=_theorem_id, help="theorem id or 'all'")
    p.add_argument("--n", type=int, default=3, help="order (max order for 'all')")
    p.add_argument("--sample", type=int, metavar="K", help="sampled mode with K draws")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("linear", parents=[out], help="linear groupoids over Z_m")
    p.add_argument("action", choices=["compose"])
    p.add_argument("coeffs", type=int, nargs=6, metavar="k", help="a b c d e f")
    p.add_argument("--mod", type=int, required=True)
    p.set_defaults(func=cmd_linear)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"zbin: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
