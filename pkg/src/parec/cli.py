"""Command-line front end.

Exit codes: 0 success, 1 malformed input (or a failed verify check), 2 order or
shape guard violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .diagrams import enumerate_diagrams, parse_diagram
from .errors import BoundError, check_order
from .matfun import SquareMatrix, determinant, immanant, permanent, recombinant
from .pachar import TABLE_LIMIT, character, shape_from_json, shapes
from .scalars import format_rational


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args: argparse.Namespace, text: str, payload: object) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_char_table(args: argparse.Namespace) -> int:
    check_order(args.n, TABLE_LIMIT, "char-table")
    ixs = [shape_from_json(args.shape, args.n)] if args.shape is not None else shapes(args.n)
    diagrams = list(enumerate_diagrams(args.n))
    rows = [(ix, d, character(ix, d)) for ix in ixs for d in diagrams]
    if args.format == "json":
        print(json.dumps([
            {"shape": list(ix.shape), "diagram": d.to_json(), "value": v.to_json()}
            for ix, d, v in rows
        ]))
    elif args.shape is not None:
        for _, d, v in rows:
            print(f"{d}\t{v}")
    else:
        for ix, d, v in rows:
            print(f"{ix}\t{d}\t{v}")
    return 0


def cmd_char(args: argparse.Namespace) -> int:
    d = parse_diagram(args.diagram)
    check_order(d.n, TABLE_LIMIT, "char")
    ix = shape_from_json(args.shape, d.n)
    value = character(ix, d)
    _emit(args, str(value), {"shape": list(ix.shape), "diagram": d.to_json(), "value": value.to_json()})
    return 0


def cmd_rec(args: argparse.Namespace) -> int:
    a = SquareMatrix.load(args.matrix)
    ix = shape_from_json(args.shape, a.n)
    value = recombinant(ix, a)
    _emit(args, str(value), {"shape": list(ix.shape), "value": value.to_json()})
    return 0


def cmd_imm(args: argparse.Namespace) -> int:
    a = SquareMatrix.load(args.matrix)
    ix = shape_from_json(args.shape, a.n)
    if ix.size != a.n:
        raise BoundError(f"immanant shape {list(ix.shape)} must partition {a.n}")
    value = format_rational(immanant(ix.shape, a))
    _emit(args, value, {"value": value})
    return 0


def cmd_det(args: argparse.Namespace) -> int:
    value = format_rational(determinant(SquareMatrix.load(args.matrix)))
    _emit(args, value, {"value": value})
    return 0


def cmd_perm(args: argparse.Namespace) -> int:
    value = format_rational(permanent(SquareMatrix.load(args.matrix)))
    _emit(args, value, {"value": value})
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    diagrams = enumerate_diagrams(args.n)
    if args.format == "json":
        print(json.dumps([d.to_json() for d in diagrams]))
    else:
        for d in diagrams:
            print(d)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    checks = verify.run(args.n, args.suite, args.seed, args.slow)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parec", description="Partition-algebra characters and recombinants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("char-table", help="character values on every diagram of order N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", help='JSON partition, e.g. "[]" or "[2,1]"')
    fmt(p)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("char", help="one character value")
    p.add_argument("--shape", required=True)
    p.add_argument("--diagram", required=True, help="e.g. \"{{1,2'},{2,1'}}\"")
    fmt(p)
    p.set_defaults(func=cmd_char)

    for name, func, needs_shape in (
        ("rec", cmd_rec, True),
        ("imm", cmd_imm, True),
        ("det", cmd_det, False),
        ("perm", cmd_perm, False),
    ):
        p = sub.add_parser(name)
        p.add_argument("--matrix", required=True, help="JSON matrix file")
        if needs_shape:
            p.add_argument("--shape", required=True)
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", help="list the diagrams of order N")
    p.add_argument("--n", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slow", action="store_true", help="allow n = 4")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundError as exc:
        print(f"parec: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"parec: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
