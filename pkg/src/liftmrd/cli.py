"""Command-line interface.

Exit statuses: 0 ok, 1 verification failure, 2 invalid parameters,
3 cap exceeded. Errors go to stderr as a single line starting with
``error:``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import bounds
from .construct import (
    CodeParams,
    MalformedDocument,
    build_multi,
    dumps_document,
    export_document,
    size_closed_form_kd,
    size_formula,
    verify_document,
)
from .errors import CapExceeded, InvalidParams, TrivialCode
from .galois import prime_power
from .linalg import DEFAULT_VERIFICATION_CAP
from .mrd import MrdParams, build_mrd, min_rank_distance, singleton_bound

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _ok(flag: bool) -> str:
    return "OK" if flag else "FAIL"


def cmd_build(args: argparse.Namespace) -> int:
    params = CodeParams(args.q, args.n, args.k, args.d)
    code = build_multi(params)
    if args.out is not None:
        doc = export_document(code, with_codewords=not args.header_only, cap=args.cap)
        Path(args.out).write_text(dumps_document(doc))
    print(f"N={code.size}")
    return EXIT_OK


def cmd_size(args: argparse.Namespace) -> int:
    params = CodeParams(args.q, args.n, args.k, args.d)
    n_general = size_formula(params)
    if params.k != params.d:
        print(f"N={n_general}")
        return EXIT_OK
    closed = size_closed_form_kd(params.q, params.n, params.k)
    print(f"N={n_general} closed_form={closed}")
    return EXIT_OK if closed == n_general else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedDocument(f"cannot read {args.input}: {exc}") from None
    report = verify_document(doc, cap=args.cap)
    print(
        f"cardinality={_ok(report.cardinality_ok)} "
        f"min_distance={_ok(report.min_distance_ok)} "
        f"components={_ok(report.components_ok)}"
    )
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_mrd(args: argparse.Namespace) -> int:
    params = MrdParams(args.q, args.rows, args.cols, args.d)
    bound = singleton_bound(args.q, args.rows, args.cols, args.d)
    if not args.verify:
        print(f"bound={bound}")
        return EXIT_OK
    code = build_mrd(params)
    try:
        measured = min_rank_distance(code, cap=args.cap)
    except TrivialCode:
        print(f"bound={bound} min_rank_distance=n/a (trivial)")
        return EXIT_OK
    print(f"bound={bound} min_rank_distance={measured}")
    return EXIT_OK if measured == args.d and code.size == bound else EXIT_FAIL


def _q_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidParams(f"--q expects a comma-separated list of integers, got {text!r}") from None
    if not values:
        raise InvalidParams("--q needs at least one field size")
    for q in values:
        prime_power(q)
    return values


def cmd_table(args: argparse.Namespace) -> int:
    rows = bounds.bound_table(
        _q_list(args.q), range(0, args.n_max + 1), range(1, args.k_max + 1), bounds.all_distances
    )
    render = bounds.render_csv if args.format == "csv" else bounds.render_markdown
    sys.stdout.write(render(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liftmrd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def code_flags(p: argparse.ArgumentParser) -> None:
        for name in ("q", "n", "k", "d"):
            p.add_argument(f"--{name}", type=int, required=True)

    p = sub.add_parser("build", help="construct the multi-component code and optionally export it")
    code_flags(p)
    p.add_argument("--out", help="write the JSON export here")
    p.add_argument("--header-only", action="store_true", help="export sizes without codewords")
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFICATION_CAP)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("size", help="evaluate the cardinality formula")
    code_flags(p)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("verify", help="re-check an exported code against its header")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFICATION_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mrd", help="MRD bound and optional brute-force distance check")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFICATION_CAP)
    p.set_defaults(func=cmd_mrd)

    p = sub.add_parser("table", help="tabulate lower bounds on A_q(n,d,k)")
    p.add_argument("--q", required=True, help="comma-separated field sizes")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidParams, MalformedDocument) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
