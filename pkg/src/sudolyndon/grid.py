"""Puzzle data model, the v1 text format, the JSON interchange form, and grid checking.

Grid cells are single characters: ``a`` and ``b`` are letters, ``.`` is an
empty cell (a hole) and ``*`` is a wildcard whose final value is deliberately
ambivalent.  In word context holes render as ``?`` instead; the two spellings
are intentional, one per surface.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import IncompleteGridError, PuzzleError, PuzzleFormatError
from .partial import HOLE
from .words import A, B, Order, is_lyndon, swap_letters

HOLE_CELL = "."
WILD_CELL = "*"
_CELL_CHARS = frozenset((A, B, HOLE_CELL, WILD_CELL))

FORMAT_HEADER = "sudolyndon 1"

ROW, COL, BOX = "row", "col", "box"
_KIND_ORDER = {ROW: 0, COL: 1, BOX: 2}

ALT_VALID, BLT_VALID, INVALID, INCOMPLETE = "altValid", "bltValid", "invalid", "incomplete"


class DegenerateGridWarning(UserWarning):
    """Grids with a single row or column cannot be constrained along that axis."""


class LineRef(NamedTuple):
    kind: str  # one of ROW, COL, BOX
    index: int


class Variant(str, enum.Enum):
    BASE = "base"
    COUNTS = "counts"
    COUNTS_PLUS_CLUES = "countsPlusClues"
    BOXES = "boxes"
    BOXES_WILD = "boxesWild"


@dataclass(frozen=True)
class Puzzle:
    """An n x m clue grid plus optional side constraints.

    ``row_acounts`` / ``col_acounts`` give the number of ``a`` letters each
    row / column must contain.  ``box_dims`` tiles the grid into r x c
    subgrids that must spell Lyndon words too.  ``forbidden_factors`` are
    words no line of a solution may contain.
    """

    n: int
    m: int
    cells: tuple[str, ...]
    row_acounts: tuple[int, ...] | None = None
    col_acounts: tuple[int, ...] | None = None
    box_dims: tuple[int, int] | None = None
    forbidden_factors: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise PuzzleError("grid dimensions must be positive")
        if len(self.cells) != self.n:
            raise PuzzleError(f"expected {self.n} grid rows, got {len(self.cells)}")
        for i, row in enumerate(self.cells):
            if len(row) != self.m:
                raise PuzzleError(f"row {i} has {len(row)} cells, expected {self.m}")
            bad = set(row) - _CELL_CHARS
            if bad:
                raise PuzzleError(f"row {i} has illegal cell characters {sorted(bad)!r}")
        if self.row_acounts is not None:
            if len(self.row_acounts) != self.n:
                raise PuzzleError("rowcounts length must equal the number of rows")
            for i, c in enumerate(self.row_acounts):
                if not 0 <= c <= self.m:
                    raise PuzzleError(f"row {i} a-count {c} outside [0, {self.m}]")
        if self.col_acounts is not None:
            if len(self.col_acounts) != self.m:
                raise PuzzleError("colcounts length must equal the number of columns")
            for j, c in enumerate(self.col_acounts):
                if not 0 <= c <= self.n:
                    raise PuzzleError(f"col {j} a-count {c} outside [0, {self.n}]")
        if self.row_acounts is not None and self.col_acounts is not None:
            if sum(self.row_acounts) != sum(self.col_acounts):
                raise PuzzleError("row a-counts and col a-counts must have equal sums")
        if self.box_dims is not None:
            r, c = self.box_dims
            if r < 1 or c < 1:
                raise PuzzleError("box dimensions must be positive")
            if self.n % r or self.m % c:
                raise PuzzleError(
                    f"boxes {r}x{c} do not tile a {self.n}x{self.m} grid exactly"
                )

    @property
    def variant(self) -> Variant:
        if any(WILD_CELL in row for row in self.cells):
            return Variant.BOXES_WILD
        if self.box_dims is not None:
            return Variant.BOXES
        if self.row_acounts is not None or self.col_acounts is not None:
            if any(ch in (A, B) for row in self.cells for ch in row):
                return Variant.COUNTS_PLUS_CLUES
            return Variant.COUNTS
        return Variant.BASE

    @property
    def clue_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i, row in enumerate(self.cells)
            for j, ch in enumerate(row)
            if ch in (A, B)
        )

    @property
    def wild_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i, row in enumerate(self.cells)
            for j, ch in enumerate(row)
            if ch == WILD_CELL
        )

    def line_refs(self) -> list[LineRef]:
        return line_refs(self.n, self.m, self.box_dims)

    def with_cells(self, cells: Sequence[str]) -> "Puzzle":
        return Puzzle(
            self.n,
            self.m,
            tuple(cells),
            self.row_acounts,
            self.col_acounts,
            self.box_dims,
            self.forbidden_factors,
        )


@dataclass(frozen=True)
class Solution:
    """A fully assigned grid with the order under which each line validates."""

    cells: tuple[str, ...]
    line_orders: Mapping[LineRef, Order] = field(compare=False, default_factory=dict)

    def __hash__(self):
        return hash(self.cells)


def empty_puzzle(
    n: int,
    m: int,
    *,
    box_dims: tuple[int, int] | None = None,
    forbidden_factors: tuple[str, ...] = (),
) -> Puzzle:
    return Puzzle(
        n,
        m,
        tuple(HOLE_CELL * m for _ in range(n)),
        box_dims=box_dims,
        forbidden_factors=forbidden_factors,
    )


def line_refs(n: int, m: int, box_dims: tuple[int, int] | None = None) -> list[LineRef]:
    refs = [LineRef(ROW, i) for i in range(n)]
    refs += [LineRef(COL, j) for j in range(m)]
    if box_dims is not None:
        r, c = box_dims
        refs += [LineRef(BOX, k) for k in range((n // r) * (m // c))]
    return refs


def line_cells(
    ref: LineRef, n: int, m: int, box_dims: tuple[int, int] | None = None
) -> list[tuple[int, int]]:
    """Grid coordinates of a line, in reading order.

    Rows read left to right, columns top-down, boxes row by row from the top
    left of the subgrid.
    """
    kind, idx = ref
    if kind == ROW:
        if not 0 <= idx < n:
            raise PuzzleError(f"row index {idx} out of range")
        return [(idx, j) for j in range(m)]
    if kind == COL:
        if not 0 <= idx < m:
            raise PuzzleError(f"col index {idx} out of range")
        return [(i, idx) for i in range(n)]
    if kind == BOX:
        if box_dims is None:
            raise PuzzleError("box line requested but the puzzle has no boxes")
        r, c = box_dims
        per_band = m // c
        if not 0 <= idx < (n // r) * per_band:
            raise PuzzleError(f"box index {idx} out of range")
        bi, bj = divmod(idx, per_band)
        return [(bi * r + di, bj * c + dj) for di in range(r) for dj in range(c)]
    raise PuzzleError(f"unknown line kind {kind!r}")


def extract_line(
    cells: Sequence[str], ref: LineRef, box_dims: tuple[int, int] | None = None
) -> str:
    """The letter/hole word of a row, column or box; empty and wild cells map to ``?``."""
    n, m = len(cells), len(cells[0])
    chars = [cells[i][j] for i, j in line_cells(ref, n, m, box_dims)]
    return "".join(HOLE if ch in (HOLE_CELL, WILD_CELL) else ch for ch in chars)


def line_status(word: str) -> str:
    """Status of one line's word: altValid, bltValid, invalid or incomplete.

    Single letters are Lyndon under both orders; they report the order whose
    smallest letter they are.
    """
    if HOLE in word:
        return INCOMPLETE
    if len(word) == 1:
        return ALT_VALID if word == A else BLT_VALID
    if word[0] == A:
        return ALT_VALID if is_lyndon(word, Order.ALT) else INVALID
    return BLT_VALID if is_lyndon(word, Order.BLT) else INVALID


def line_order(word: str) -> Order | None:
    status = line_status(word)
    if status == ALT_VALID:
        return Order.ALT
    if status == BLT_VALID:
        return Order.BLT
    return None


@dataclass(frozen=True)
class LineVerdict:
    ref: LineRef
    status: str


@dataclass(frozen=True)
class GridReport:
    lines: tuple[LineVerdict, ...]
    count_failures: tuple[LineRef, ...]
    factor_failures: tuple[tuple[LineRef, str], ...]
    passed: bool


def check_grid(cells: Sequence[str], puzzle: Puzzle) -> GridReport:
    """Verdict for a fully assigned grid against ``puzzle``'s constraints.

    Every row, column and box must spell a Lyndon word under one of the two
    orders; a-count and forbidden-factor constraints are reported separately.
    Runs in time linear in the number of cells.
    """
    cells = tuple(cells)
    if len(cells) != puzzle.n or any(len(row) != puzzle.m for row in cells):
        raise PuzzleError(f"grid is not {puzzle.n}x{puzzle.m}")
    for row in cells:
        if HOLE_CELL in row or HOLE in row:
            raise IncompleteGridError("grid still has empty cells")
        bad = set(row) - {A, B}
        if bad:
            raise PuzzleError(f"grid has non-letter cells {sorted(bad)!r}")

    words: dict[LineRef, str] = {LineRef(ROW, i): row for i, row in enumerate(cells)}
    for j, col in enumerate(map("".join, zip(*cells))):
        words[LineRef(COL, j)] = col
    if puzzle.box_dims is not None:
        r, c = puzzle.box_dims
        per_band = puzzle.m // c
        for k in range((puzzle.n // r) * per_band):
            bi, bj = divmod(k, per_band)
            words[LineRef(BOX, k)] = "".join(
                cells[bi * r + di][bj * c : bj * c + c] for di in range(r)
            )

    verdicts = tuple(LineVerdict(ref, line_status(w)) for ref, w in words.items())

    count_failures = []
    if puzzle.row_acounts is not None:
        for i, want in enumerate(puzzle.row_acounts):
            if cells[i].count(A) != want:
                count_failures.append(LineRef(ROW, i))
    if puzzle.col_acounts is not None:
        for j, want in enumerate(puzzle.col_acounts):
            if words[LineRef(COL, j)].count(A) != want:
                count_failures.append(LineRef(COL, j))

    factor_failures = []
    if puzzle.forbidden_factors:
        for ref, w in words.items():
            for f in puzzle.forbidden_factors:
                if f in w:
                    factor_failures.append((ref, f))

    passed = (
        all(v.status in (ALT_VALID, BLT_VALID) for v in verdicts)
        and not count_failures
        and not factor_failures
    )
    return GridReport(verdicts, tuple(count_failures), tuple(factor_failures), passed)


# ---------------------------------------------------------------------------
# Text format v1 (grammar in docs/format.md)


def parse_puzzle(text: str | bytes) -> Puzzle:
    """Parse the v1 text format.  Errors carry 1-based line (and column) positions."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise PuzzleFormatError(f"not ASCII: {exc}") from None
    lines = text.splitlines()
    pos = 0

    def next_line() -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines):
            pos += 1
            stripped = lines[pos - 1].rstrip()
            if stripped:
                return pos, stripped
        raise PuzzleFormatError("unexpected end of file", len(lines) or 1)

    lineno, header = next_line()
    if " ".join(header.split()) != FORMAT_HEADER:
        raise PuzzleFormatError(f"expected header {FORMAT_HEADER!r}", lineno)

    lineno, size_line = next_line()
    toks = size_line.split()
    if len(toks) != 3 or toks[0] != "size":
        raise PuzzleFormatError("expected 'size <rows> <cols>'", lineno)
    try:
        n, m = int(toks[1]), int(toks[2])
    except ValueError:
        raise PuzzleFormatError("size takes two integers", lineno) from None
    if n < 1 or m < 1:
        raise PuzzleFormatError("size dimensions must be positive", lineno)

    box_dims = None
    row_acounts = None
    col_acounts = None
    forbidden: tuple[str, ...] = ()

    def parse_counts(toks: list[str], want: int, limit: int, lineno: int) -> tuple[int, ...]:
        if len(toks) != want + 1:
            raise PuzzleFormatError(f"expected {want} integers after {toks[0]!r}", lineno)
        try:
            values = tuple(int(t) for t in toks[1:])
        except ValueError:
            raise PuzzleFormatError(f"{toks[0]} takes integers", lineno) from None
        for v in values:
            if not 0 <= v <= limit:
                raise PuzzleFormatError(f"count {v} outside [0, {limit}]", lineno)
        return values

    while True:
        lineno, line = next_line()
        toks = line.split()
        key = toks[0]
        if key == "grid":
            if len(toks) != 1:
                raise PuzzleFormatError("'grid' takes no arguments", lineno)
            break
        if key == "boxes":
            if len(toks) != 3:
                raise PuzzleFormatError("expected 'boxes <rows> <cols>'", lineno)
            try:
                box_dims = (int(toks[1]), int(toks[2]))
            except ValueError:
                raise PuzzleFormatError("boxes takes two integers", lineno) from None
            if box_dims[0] < 1 or box_dims[1] < 1:
                raise PuzzleFormatError("box dimensions must be positive", lineno)
            if n % box_dims[0] or m % box_dims[1]:
                raise PuzzleFormatError(
                    f"boxes {box_dims[0]}x{box_dims[1]} do not tile a {n}x{m} grid",
                    lineno,
                )
        elif key == "rowcounts":
            row_acounts = parse_counts(toks, n, m, lineno)
        elif key == "colcounts":
            col_acounts = parse_counts(toks, m, n, lineno)
        elif key == "forbid":
            if len(toks) < 2:
                raise PuzzleFormatError("forbid needs at least one word", lineno)
            for w in toks[1:]:
                bad = set(w) - {A, B}
                if bad:
                    raise PuzzleFormatError(
                        f"forbidden word {w!r} has letters outside 'a'/'b'", lineno
                    )
            forbidden = tuple(toks[1:])
        else:
            raise PuzzleFormatError(f"unknown directive {key!r}", lineno)

    rows = []
    for i in range(n):
        lineno, line = next_line()
        if len(line) != m:
            raise PuzzleFormatError(
                f"grid row {i + 1} has {len(line)} cells, expected {m}", lineno
            )
        for j, ch in enumerate(line):
            if ch not in _CELL_CHARS:
                raise PuzzleFormatError(
                    f"illegal cell character {ch!r}", lineno, j + 1
                )
            if ch == WILD_CELL and box_dims is None:
                raise PuzzleFormatError(
                    "wildcard cells are only legal in puzzles with boxes", lineno, j + 1
                )
        rows.append(line)

    while pos < len(lines):
        pos += 1
        if lines[pos - 1].strip():
            raise PuzzleFormatError("trailing content after the grid", pos)

    if row_acounts is not None and col_acounts is not None:
        if sum(row_acounts) != sum(col_acounts):
            raise PuzzleFormatError("row and col a-count sums differ")

    puzzle = Puzzle(n, m, tuple(rows), row_acounts, col_acounts, box_dims, forbidden)
    if n == 1 or m == 1:
        warnings.warn(
            f"{n}x{m} grid: length-1 lines accept either letter and constrain nothing",
            DegenerateGridWarning,
            stacklevel=2,
        )
    return puzzle


def render_puzzle(puzzle: Puzzle) -> str:
    """Canonical text form: single spaces, fixed directive order, one trailing newline."""
    if puzzle.wild_cells and puzzle.box_dims is None:
        raise PuzzleError("wildcards without boxes are not representable in format v1")
    out = [FORMAT_HEADER, f"size {puzzle.n} {puzzle.m}"]
    if puzzle.box_dims is not None:
        out.append(f"boxes {puzzle.box_dims[0]} {puzzle.box_dims[1]}")
    if puzzle.row_acounts is not None:
        out.append("rowcounts " + " ".join(map(str, puzzle.row_acounts)))
    if puzzle.col_acounts is not None:
        out.append("colcounts " + " ".join(map(str, puzzle.col_acounts)))
    if puzzle.forbidden_factors:
        out.append("forbid " + " ".join(puzzle.forbidden_factors))
    out.append("grid")
    out.extend(puzzle.cells)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# JSON interchange


def puzzle_to_json(puzzle: Puzzle) -> dict:
    return {
        "n": puzzle.n,
        "m": puzzle.m,
        "cells": list(puzzle.cells),
        "variant": puzzle.variant.value,
        "rowACounts": list(puzzle.row_acounts) if puzzle.row_acounts is not None else None,
        "colACounts": list(puzzle.col_acounts) if puzzle.col_acounts is not None else None,
        "boxRows": puzzle.box_dims[0] if puzzle.box_dims else None,
        "boxCols": puzzle.box_dims[1] if puzzle.box_dims else None,
        "forbiddenFactors": list(puzzle.forbidden_factors),
    }


def puzzle_from_json(data: Mapping) -> Puzzle:
    try:
        n, m = int(data["n"]), int(data["m"])
        cells = tuple(str(row) for row in data["cells"])
    except (KeyError, TypeError, ValueError) as exc:
        raise PuzzleError(f"malformed puzzle object: {exc}") from None
    raw_rc = data.get("rowACounts")
    raw_cc = data.get("colACounts")
    box_rows = data.get("boxRows")
    box_cols = data.get("boxCols")
    if (box_rows is None) != (box_cols is None):
        raise PuzzleError("boxRows and boxCols must be given together")
    return Puzzle(
        n,
        m,
        cells,
        tuple(int(x) for x in raw_rc) if raw_rc is not None else None,
        tuple(int(x) for x in raw_cc) if raw_cc is not None else None,
        (int(box_rows), int(box_cols)) if box_rows is not None else None,
        tuple(str(w) for w in data.get("forbiddenFactors") or ()),
    )


def solution_to_json(solution: Solution) -> dict:
    return {
        "cells": list(solution.cells),
        "lineOrders": [
            {"kind": ref.kind, "index": ref.index, "order": order.value}
            for ref, order in solution.line_orders.items()
        ],
    }


# ---------------------------------------------------------------------------
# Dualities


def transpose_grid(cells: Iterable[str]) -> tuple[str, ...]:
    return tuple(map("".join, zip(*cells)))


def swap_grid(cells: Iterable[str]) -> tuple[str, ...]:
    # str.translate leaves '.' and '*' untouched.
    return tuple(swap_letters(row) for row in cells)


def transpose_puzzle(puzzle: Puzzle) -> Puzzle:
    return Puzzle(
        puzzle.m,
        puzzle.n,
        transpose_grid(puzzle.cells),
        puzzle.col_acounts,
        puzzle.row_acounts,
        (puzzle.box_dims[1], puzzle.box_dims[0]) if puzzle.box_dims else None,
        puzzle.forbidden_factors,
    )


def swap_puzzle(puzzle: Puzzle) -> Puzzle:
    """Letter-swapped twin: a-counts become line length minus the old count."""
    return Puzzle(
        puzzle.n,
        puzzle.m,
        swap_grid(puzzle.cells),
        tuple(puzzle.m - c for c in puzzle.row_acounts)
        if puzzle.row_acounts is not None
        else None,
        tuple(puzzle.n - c for c in puzzle.col_acounts)
        if puzzle.col_acounts is not None
        else None,
        puzzle.box_dims,
        tuple(swap_letters(w) for w in puzzle.forbidden_factors),
    )
