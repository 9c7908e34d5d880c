"""Command-line interface: evaluate boards, dump grids, count trees, bench, serve.

Exit codes: 0 success, 2 unparseable partition, 3 empty board where boxes
are required, 4 box budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analytics import TreeCensus, census, census_closed_form, census_csv
from .bench import DEFAULT_ORACLE_BENCH_BOXES, MAX_EXPONENT, bench_csv, run_bench
from .errors import BudgetExceeded, EmptyBoard, InvalidFamilyParam, NotAPartition, ParseError
from .oracle import oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr
from .partition import FamilyKind, FamilySpec, Partition, format_partition, make_family, parse_partition
from .server import create_server
from .solver import Game, outcome, sg_value

EXIT_PARSE = 2
EXIT_EMPTY = 3
EXIT_BUDGET = 4


def _parse_or_exit(text: str) -> Partition:
    try:
        return parse_partition(text)
    except (ParseError, NotAPartition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def cmd_sg(args) -> int:
    game = Game.from_wire(args.game)
    board = _parse_or_exit(args.partition)
    try:
        if game is Game.LCTR_MISERE:
            print(outcome(game, board).value)
        else:
            print(sg_value(game, board))
    except EmptyBoard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    return 0


def cmd_grid(args) -> int:
    game = Game.from_wire(args.game)
    board = _parse_or_exit(args.partition)
    try:
        if game is Game.LCTR:
            print(oracle_sg_lctr(board).dump())
        elif game is Game.DOWNRIGHT:
            print(oracle_sg_downright(board).dump())
        else:
            print(oracle_misere_pn(board).dump())
    except EmptyBoard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def _parse_range(text: str) -> range:
    """``"4"`` is that single value, ``"2..5"`` an inclusive range."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(text)
    return range(value, value + 1)


def cmd_census(args) -> int:
    game = Game.from_wire(args.game)
    rows: list[tuple[str, Game, int, int, TreeCensus]] = []
    try:
        if args.family:
            kind = FamilyKind(args.family)
            for r in _parse_range(args.rows):
                for c in _parse_range(args.cols) if kind is not FamilyKind.STAIRCASE else [0]:
                    spec = FamilySpec(kind, r, c if kind is not FamilyKind.STAIRCASE else None)
                    board = make_family(spec)
                    result = census_closed_form(game, spec) if args.closed_form else census(game, board)
                    rows.append((kind.value, game, r, c, result))
        else:
            if args.partition is None:
                print("error: give a partition or --family", file=sys.stderr)
                return EXIT_PARSE
            board = _parse_or_exit(args.partition)
            result = census(game, board)
            width = board.parts[0] if board else 0
            rows.append((format_partition(board), game, len(board), width, result))
    except EmptyBoard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (BudgetExceeded, InvalidFamilyParam) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(census_csv(rows), end="")
    return 0


def cmd_bench(args) -> int:
    records = run_bench(
        max_exponent=args.max_exponent,
        repetitions=args.repetitions,
        min_exponent=args.min_exponent,
        oracle_max_boxes=args.oracle_max_boxes,
    )
    print(bench_csv(records), end="")
    return 0


def cmd_serve(args) -> int:
    port = int(os.environ.get("PORT", args.port))
    server = create_server(host=args.host, port=port, ui_dir=args.ui, verbose=True)
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lctr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    games = [g.value for g in Game]

    p_sg = sub.add_parser("sg", help="print the game value (or P/N for misère) of a board")
    p_sg.add_argument("partition", help='board as comma-separated parts, e.g. "6,4^2,2,1^2"')
    p_sg.add_argument("--game", choices=games, default=Game.LCTR.value)
    p_sg.set_defaults(fn=cmd_sg)

    p_grid = sub.add_parser("grid", help="print the per-box reference grid")
    p_grid.add_argument("partition")
    p_grid.add_argument("--game", choices=games, default=Game.LCTR.value)
    p_grid.set_defaults(fn=cmd_grid)

    p_census = sub.add_parser("census", help="game-tree node/leaf/state counts as CSV")
    p_census.add_argument("partition", nargs="?")
    p_census.add_argument("--game", choices=[Game.LCTR.value, Game.DOWNRIGHT.value], default=Game.LCTR.value)
    p_census.add_argument("--family", choices=[k.value for k in FamilyKind])
    p_census.add_argument("--rows", default="1", help='r value or inclusive range "1..8"')
    p_census.add_argument("--cols", default="1", help='c value or inclusive range "1..8"')
    p_census.add_argument("--closed-form", action="store_true", help="use the family formulas instead of the DP")
    p_census.set_defaults(fn=cmd_census)

    p_bench = sub.add_parser("bench", help="probe/box-count benchmark CSV on staircases")
    p_bench.add_argument("--max-exponent", type=int, default=20, help=f"largest staircase is 2^k rows, k <= {MAX_EXPONENT}")
    p_bench.add_argument("--min-exponent", type=int, default=10)
    p_bench.add_argument("--repetitions", type=int, default=3)
    p_bench.add_argument("--oracle-max-boxes", type=int, default=DEFAULT_ORACLE_BENCH_BOXES)
    p_bench.set_defaults(fn=cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP play/eval service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000, help="overridden by the PORT environment variable")
    p_serve.add_argument("--ui", help="directory of built UI files to serve at /")
    p_serve.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
