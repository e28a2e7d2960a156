"""Command-line front end: tables, classification, best moves, verification.

Exit codes: 0 success (and all checks passed), 1 verification failure,
2 usage or capacity error.
"""

from __future__ import annotations

import argparse
import sys

from .conventions import Convention
from .game import Engine, Position
from .tables import DEFAULT_MAX_N, CapacityError, TableFunction, ValueTable, build_table
from .verify import CHECK_NAMES, THEOREM_CAP, run_checks

_FUNCTION_FLAGS = {
    "g0": TableFunction.G0,
    "g1": TableFunction.G1,
    "gm1": TableFunction.GM1,
    "gm1star": TableFunction.GM1STAR,
}


def _format_csv(table: ValueTable, header: bool) -> str:
    lines = []
    if header:
        lines.append("," + ",".join(str(y) for y in range(table.n)))
    for x in range(table.n):
        row = ",".join(str(table.value(x, y)) for y in range(table.n))
        lines.append(f"{x},{row}" if header else row)
    return "\n".join(lines)


def _format_markdown(table: ValueTable) -> str:
    """Pipe table with y indices across the top and x labels down the left."""
    head = "| x\\y | " + " | ".join(str(y) for y in range(table.n)) + " |"
    rule = "| --- |" + " ---: |" * table.n
    lines = [head, rule]
    for x in range(table.n):
        cells = " | ".join(str(table.value(x, y)) for y in range(table.n))
        lines.append(f"| {x} | {cells} |")
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    function = _FUNCTION_FLAGS[args.function]
    table = build_table(function, args.size, max_n=args.max_n)
    if args.format == "csv":
        print(_format_csv(table, args.header))
    else:
        print(_format_markdown(table))
    return 0


def _position(args: argparse.Namespace) -> Position:
    return Position(args.x, args.y, args.z)


def cmd_outcome(args: argparse.Namespace) -> int:
    convention = Convention(args.convention)
    engine = Engine(max_n=args.max_n)
    g = _position(args)
    outcome = engine.outcome(g, convention)
    aux = engine.aux_value(g, convention)
    function = TableFunction.GM1 if convention is Convention.NORMAL else TableFunction.GM1STAR
    print(outcome.value)
    print(f"{function.value}({g.x}, {g.z}) = {aux}")
    return 0


def cmd_best_move(args: argparse.Namespace) -> int:
    convention = Convention(args.convention)
    engine = Engine(max_n=args.max_n)
    g = _position(args)
    if g.is_terminal():
        print("no moves available (terminal position)")
        return 0
    move = engine.winning_move(g, convention)
    if move is None:
        print("no winning move (P-position)")
        return 0
    after = move.after
    print(f"({after.x}, {after.y}, {after.z})")
    print(move.pickup)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_checks(args.checks, max_coord=args.max, max_n=args.max_n)
    failed = False
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        line = f"{status} {report.name}: {report.tested} [{report.elapsed:.2f}s]"
        if not report.passed:
            failed = True
            first = report.mismatches[0]
            line += (
                f" - {len(report.mismatches)} mismatches, first at {first.inputs}:"
                f" expected {first.expected}, got {first.actual}"
            )
        print(line)
    return 1 if failed else 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(max_n=args.max_n), host=args.host, port=args.port)
    return 0


def _add_position_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("x", type=int, help="left outer block size")
    parser.add_argument("y", type=int, help="middle block size")
    parser.add_argument("z", type=int, help="right outer block size")
    parser.add_argument(
        "--convention",
        choices=[c.value for c in Convention],
        default=Convention.NORMAL.value,
        help="who wins on the last stone (default: normal)",
    )


def _add_max_n(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_MAX_N,
        metavar="N",
        help=f"table capacity (default: {DEFAULT_MAX_N})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiroi",
        description="Exact solver for the linear two-player stone-picking game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print one of the four value tables")
    p_table.add_argument(
        "--function", choices=sorted(_FUNCTION_FLAGS), required=True, help="which table"
    )
    p_table.add_argument("--size", type=int, default=12, help="table side length (default: 12)")
    p_table.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p_table.add_argument(
        "--header", action="store_true", help="csv only: include x/y index row and column"
    )
    _add_max_n(p_table)
    p_table.set_defaults(handler=cmd_table)

    p_outcome = sub.add_parser("outcome", help="classify a position as P or N")
    _add_position_arguments(p_outcome)
    _add_max_n(p_outcome)
    p_outcome.set_defaults(handler=cmd_outcome)

    p_best = sub.add_parser("best-move", help="print a winning move if one exists")
    _add_position_arguments(p_best)
    _add_max_n(p_best)
    p_best.set_defaults(handler=cmd_best_move)

    p_verify = sub.add_parser("verify", help="cross-check fast paths against slow ones")
    p_verify.add_argument(
        "--max",
        type=int,
        default=THEOREM_CAP,
        help=f"sweep coordinate bound before per-check clamps (default: {THEOREM_CAP})",
    )
    p_verify.add_argument(
        "--checks",
        nargs="+",
        choices=CHECK_NAMES,
        default=list(CHECK_NAMES),
        help="which checks to run (default: all)",
    )
    _add_max_n(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_serve = sub.add_parser("serve", help="run the JSON analysis service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    _add_max_n(p_serve)
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
