"""Command-line interface.

Exit codes: 0 on success; 1 for puzzle-level negative outcomes (no solution,
failed check, non-unique) when --strict is given; 2 for usage and format
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import IncompleteGridError, SudoLyndonError
from .generator import GenConfig, f_min, f_min_estimate, generate
from .grid import (
    Puzzle,
    check_grid,
    parse_puzzle,
    puzzle_to_json,
    render_puzzle,
    solution_to_json,
)
from .hints import CONTRADICTION, DEDUCTION, next_hint
from .partial import family_partial_word, family_solution
from .report import write_report
from .solver import CAP_CEILING, scheme_grid, scheme_star_count, solve, wild_check


def _read_puzzle(path: str) -> Puzzle:
    return parse_puzzle(Path(path).read_bytes())


def _emit(data, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, indent=2))


def cmd_solve(args) -> int:
    puzzle = _read_puzzle(args.file)
    cap = min(args.cap if args.cap else (CAP_CEILING if args.all else 2), CAP_CEILING)
    result = solve(puzzle, cap=cap)
    if args.json:
        _emit(
            {
                "count": result.count,
                "truncated": result.truncated,
                "solutions": [solution_to_json(s) for s in result.solutions],
            },
            True,
        )
    else:
        suffix = " (truncated)" if result.truncated else ""
        print(f"solutions: {result.count}{suffix}")
        for k, sol in enumerate(result.solutions):
            print(f"--- solution {k + 1}")
            for row in sol.cells:
                print(row)
    if result.count == 0 and args.strict:
        return 1
    return 0


def cmd_check(args) -> int:
    puzzle = _read_puzzle(args.file)
    try:
        report = check_grid(puzzle.cells, puzzle)
    except IncompleteGridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if args.strict else 0
    if args.json:
        _emit(
            {
                "passed": report.passed,
                "lines": [
                    {"kind": v.ref.kind, "index": v.ref.index, "status": v.status}
                    for v in report.lines
                ],
                "countFailures": [
                    {"kind": r.kind, "index": r.index} for r in report.count_failures
                ],
                "factorFailures": [
                    {"kind": r.kind, "index": r.index, "factor": f}
                    for r, f in report.factor_failures
                ],
            },
            True,
        )
    else:
        for v in report.lines:
            print(f"{v.ref.kind} {v.ref.index + 1}: {v.status}")
        for r in report.count_failures:
            print(f"{r.kind} {r.index + 1}: a-count violated")
        for r, f in report.factor_failures:
            print(f"{r.kind} {r.index + 1}: contains forbidden factor {f}")
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed or not args.strict else 1


def cmd_hint(args) -> int:
    puzzle = _read_puzzle(args.file)
    if args.board:
        board_lines = Path(args.board).read_text().split()
        board = tuple(board_lines)
    else:
        board = puzzle.cells
    hint = next_hint(puzzle, board)
    if args.json:
        payload = {"status": hint.status}
        if hint.status == DEDUCTION:
            d = hint.deduction
            payload.update(
                rule=d.rule,
                assignments=[
                    {"kind": a.line.kind, "index": a.line.index, "pos": a.pos, "letter": a.letter}
                    for a in d.assignments
                ],
                explanation=d.explanation,
            )
        elif hint.status == CONTRADICTION and hint.line:
            payload["line"] = {"kind": hint.line.kind, "index": hint.line.index}
        _emit(payload, True)
    else:
        if hint.status == DEDUCTION:
            d = hint.deduction
            print(d.explanation)
            for a in d.assignments:
                print(f"  {a.line.kind} {a.line.index + 1}, cell {a.pos + 1} -> {a.letter}")
        elif hint.status == CONTRADICTION:
            where = f" ({hint.line.kind} {hint.line.index + 1})" if hint.line else ""
            print(f"contradiction{where}: some line has no Lyndon completion")
        else:
            print("exhausted: no rule-based deduction applies")
    if hint.status == CONTRADICTION and args.strict:
        return 1
    return 0


def cmd_gen(args) -> int:
    config = GenConfig(
        n=args.rows,
        m=args.cols,
        variant=args.variant,
        seed=args.seed,
        minimize=args.minimize,
        box_dims=(args.box_rows, args.box_cols)
        if args.box_rows and args.box_cols
        else None,
    )
    generated = generate(config)
    if args.json:
        _emit(
            {
                "puzzle": puzzle_to_json(generated.puzzle),
                "solution": solution_to_json(generated.solution),
            },
            True,
        )
    else:
        sys.stdout.write(render_puzzle(generated.puzzle))
        if args.solution:
            print("--- solution")
            for row in generated.solution.cells:
                print(row)
    return 0


def cmd_count(args) -> int:
    from .solver import count_full_grids

    value = count_full_grids(args.rows, args.cols)
    if args.json:
        _emit({"rows": args.rows, "cols": args.cols, "fullGrids": value}, True)
    else:
        print(value)
    return 0


def cmd_fmin(args) -> int:
    if args.exhaustive:
        value = f_min(args.rows, args.cols)
        exact = True
    else:
        value = f_min_estimate(args.rows, args.cols, trials=args.trials, seed=args.seed)
        exact = False
    if args.json:
        _emit({"rows": args.rows, "cols": args.cols, "clues": value, "exact": exact}, True)
    else:
        kind = "exact" if exact else "upper bound"
        print(f"{value} ({kind})")
    return 0


def cmd_family(args) -> int:
    pw = family_partial_word(args.p)
    word = family_solution(args.p)
    if args.json:
        _emit({"p": args.p, "partialWord": pw, "solution": word}, True)
    else:
        print(pw)
        print(word)
    return 0


def cmd_scheme(args) -> int:
    rows = scheme_grid(args.rows, args.cols, args.stars)
    if args.json:
        _emit({"cells": list(rows)}, True)
    else:
        for row in rows:
            print(row)
    return 0


def cmd_wildcheck(args) -> int:
    puzzle = _read_puzzle(args.file)
    verdict = wild_check(puzzle)
    if args.json:
        _emit({"verdict": verdict.value}, True)
    else:
        print(verdict.value)
    return 0 if verdict.value == "valid" or not args.strict else 1


def cmd_report(args) -> int:
    created = write_report(
        args.out,
        max_word_length=args.max_word_length,
        max_grid_dim=args.max_grid_dim,
        max_family_p=args.max_family_p,
    )
    for path in created:
        print(path)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudolyndon",
        description="Generate, solve, hint and verify Sudo-Lyndon puzzles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, strict=True):
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        if strict:
            p.add_argument(
                "--strict",
                action="store_true",
                help="exit 1 on puzzle-level negative results",
            )

    p = sub.add_parser("solve", help="enumerate solutions of a puzzle file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None, help="solution cap (default 2)")
    p.add_argument("--all", action="store_true", help="enumerate up to the ceiling")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check a fully filled grid file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hint", help="next deduction for a puzzle (and board)")
    p.add_argument("file")
    p.add_argument("--board", help="file with the current board rows")
    common(p)
    p.set_defaults(func=cmd_hint)

    p = sub.add_parser("gen", help="generate a uniquely solvable puzzle")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--variant", choices=("base", "counts", "boxes"), default="base")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--box-rows", type=int, default=None)
    p.add_argument("--box-cols", type=int, default=None)
    p.add_argument("--solution", action="store_true", help="also print the solution")
    common(p, strict=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="count all valid full grids of a size")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    common(p, strict=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fmin", help="minimal clue count (exhaustive or estimated)")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--trials", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    common(p, strict=False)
    p.set_defaults(func=cmd_fmin)

    p = sub.add_parser("family", help="sparse 1-D family instance: pattern and solution")
    p.add_argument("--p", type=int, required=True)
    common(p, strict=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("scheme", help="block-construction grid for given star letters")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--stars", default=None, help="star letters, a/b or 0/1, row-major")
    common(p, strict=False)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("wildcheck", help="validate a wildcard puzzle's bivalence contract")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_wildcheck)

    p = sub.add_parser("report", help="write CSV tables and PNG figures")
    p.add_argument("--out", required=True)
    p.add_argument("--max-word-length", type=int, default=16)
    p.add_argument("--max-grid-dim", type=int, default=5)
    p.add_argument("--max-family-p", type=int, default=8)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SudoLyndonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
