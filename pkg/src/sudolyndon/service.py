"""HTTP facade for the play UI.

Stateless engine calls behind a small in-memory puzzle store: identical
check/hint/solve payloads always produce identical responses.  Stored
solutions never leave the server except through the explicit reveal endpoint.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import BudgetExceededError, PuzzleError, SudoLyndonError
from .generator import GenConfig, generate
from .grid import (
    A,
    B,
    HOLE_CELL,
    Puzzle,
    Solution,
    check_grid,
    extract_line,
    line_cells,
    line_status,
    puzzle_from_json,
    puzzle_to_json,
    solution_to_json,
)
from .hints import DEDUCTION, next_hint
from .solver import solve

DEFAULT_TTL_SECONDS = 24 * 3600
DEFAULT_NODE_BUDGET = 200_000
MAX_CREATE_DIM = 12
MAX_SOLVE_CAP = 1000


@dataclass
class StoredPuzzle:
    id: str
    puzzle: Puzzle
    solution: Solution
    created_at: float


class PuzzleStore:
    """Concurrent map of id -> puzzle with lazy TTL eviction."""

    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS, clock=time.monotonic):
        self._ttl = ttl_seconds
        self._clock = clock
        self._lock = threading.Lock()
        self._items: dict[str, StoredPuzzle] = {}

    def _evict(self) -> None:
        cutoff = self._clock() - self._ttl
        stale = [k for k, v in self._items.items() if v.created_at < cutoff]
        for k in stale:
            del self._items[k]

    def put(self, puzzle: Puzzle, solution: Solution) -> StoredPuzzle:
        item = StoredPuzzle(secrets.token_urlsafe(9), puzzle, solution, 0.0)
        with self._lock:
            item.created_at = self._clock()
            self._evict()
            self._items[item.id] = item
        return item

    def get(self, puzzle_id: str) -> StoredPuzzle | None:
        with self._lock:
            self._evict()
            return self._items.get(puzzle_id)


class CreatePuzzleBody(BaseModel):
    n: int = Field(ge=1, le=MAX_CREATE_DIM)
    m: int = Field(ge=1, le=MAX_CREATE_DIM)
    variant: str = "base"
    seed: int | None = None
    boxRows: int | None = None
    boxCols: int | None = None


class BoardBody(BaseModel):
    cells: list[str]


class SolveBody(BaseModel):
    puzzle: dict
    cap: int = Field(default=2, ge=1, le=MAX_SOLVE_CAP)


def _http_error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def _validate_board(puzzle: Puzzle, cells: list[str]) -> tuple[str, ...] | JSONResponse:
    if len(cells) != puzzle.n or any(len(r) != puzzle.m for r in cells):
        return _http_error(400, f"board must be {puzzle.n} rows of {puzzle.m} cells")
    board = tuple(cells)
    legal = {A, B, HOLE_CELL}
    for row in board:
        if set(row) - legal:
            return _http_error(400, "board cells must be 'a', 'b' or '.'")
    for i, row in enumerate(puzzle.cells):
        for j, ch in enumerate(row):
            if ch in (A, B) and board[i][j] != ch:
                return _http_error(
                    422, f"board contradicts the clue at row {i + 1}, col {j + 1}"
                )
    return board


def create_app(
    *,
    store: PuzzleStore | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    app = FastAPI(title="sudolyndon", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    puzzles = store if store is not None else PuzzleStore()

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return _http_error(400, f"malformed request body: {exc.errors()[:1]}")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/api/v1/puzzles", status_code=201)
    def create_puzzle(body: CreatePuzzleBody):
        box_dims = None
        if (body.boxRows is None) != (body.boxCols is None):
            return _http_error(400, "boxRows and boxCols must be given together")
        if body.boxRows is not None:
            box_dims = (body.boxRows, body.boxCols)
        seed = body.seed if body.seed is not None else secrets.randbits(63)
        try:
            config = GenConfig(
                n=body.n, m=body.m, variant=body.variant, seed=seed, box_dims=box_dims
            )
            generated = generate(config)
        except SudoLyndonError as exc:
            return _http_error(400, str(exc))
        item = puzzles.put(generated.puzzle, generated.solution)
        return {"id": item.id, "puzzle": puzzle_to_json(item.puzzle)}

    @app.get("/api/v1/puzzles/{puzzle_id}")
    def get_puzzle(puzzle_id: str):
        item = puzzles.get(puzzle_id)
        if item is None:
            return _http_error(404, "unknown puzzle id")
        return {"puzzle": puzzle_to_json(item.puzzle)}

    @app.post("/api/v1/puzzles/{puzzle_id}/check")
    def check_board(puzzle_id: str, body: BoardBody):
        item = puzzles.get(puzzle_id)
        if item is None:
            return _http_error(404, "unknown puzzle id")
        board = _validate_board(item.puzzle, body.cells)
        if isinstance(board, JSONResponse):
            return board
        puzzle = item.puzzle
        lines = []
        complete = True
        for ref in puzzle.line_refs():
            word = extract_line(board, ref, puzzle.box_dims)
            status = line_status(word)
            if status == "incomplete":
                complete = False
            lines.append({"kind": ref.kind, "index": ref.index, "status": status})
        solved = False
        if complete:
            solved = check_grid(board, puzzle).passed
        return {"lines": lines, "solved": solved}

    @app.post("/api/v1/puzzles/{puzzle_id}/hint")
    def hint_board(puzzle_id: str, body: BoardBody):
        item = puzzles.get(puzzle_id)
        if item is None:
            return _http_error(404, "unknown puzzle id")
        board = _validate_board(item.puzzle, body.cells)
        if isinstance(board, JSONResponse):
            return board
        hint = next_hint(item.puzzle, board)
        if hint.status != DEDUCTION:
            payload = {"status": hint.status}
            if hint.line is not None:
                payload["line"] = {"kind": hint.line.kind, "index": hint.line.index}
            return payload
        deduction = hint.deduction
        cells_by_line = {}
        assignments = []
        for a in deduction.assignments:
            coords = cells_by_line.setdefault(
                a.line, line_cells(a.line, item.puzzle.n, item.puzzle.m, item.puzzle.box_dims)
            )
            i, j = coords[a.pos]
            assignments.append({"row": i, "col": j, "letter": a.letter})
        return {
            "rule": deduction.rule,
            "assignments": assignments,
            "explanation": deduction.explanation,
        }

    @app.post("/api/v1/puzzles/{puzzle_id}/reveal")
    def reveal(puzzle_id: str):
        item = puzzles.get(puzzle_id)
        if item is None:
            return _http_error(404, "unknown puzzle id")
        return {"solution": solution_to_json(item.solution)}

    @app.post("/api/v1/solve")
    def solve_payload(body: SolveBody):
        try:
            puzzle = puzzle_from_json(body.puzzle)
        except PuzzleError as exc:
            return _http_error(400, str(exc))
        try:
            result = solve(puzzle, cap=body.cap, max_nodes=node_budget)
        except BudgetExceededError as exc:
            return _http_error(429, str(exc))
        except SudoLyndonError as exc:
            return _http_error(400, str(exc))
        return {
            "count": result.count,
            "truncated": result.truncated,
            "solutions": [solution_to_json(s) for s in result.solutions],
        }

    return app
