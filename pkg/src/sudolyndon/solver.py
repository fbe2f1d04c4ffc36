"""Exhaustive puzzle solver: satisfiability, counting, enumeration, uniqueness.

Each line (row, column, box) gets a candidate set holding every Lyndon word of
the right length under either order that is consistent with the clues and side
constraints.  Candidates are bitmasks (bit p set means letter ``b`` at reading
position p).  Search alternates fixpoint propagation (letters forced across a
whole candidate set are committed and cross-filtered into intersecting lines)
with backtracking on the line holding the fewest candidates.

A solve call is single-threaded and deterministic; distinct calls share no
mutable state, so they may run concurrently without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import enum

from .errors import BudgetExceededError, LimitError, PuzzleError
from .grid import (
    A,
    B,
    COL,
    ROW,
    WILD_CELL,
    LineRef,
    Puzzle,
    Solution,
    empty_puzzle,
    line_cells,
    line_order,
    line_refs,
)
from .rng import SplitMix64
from .words import DEFAULT_ENUMERATION_BOUND, Order, enumerate_lyndon

#: Rows/columns beyond this need an explicit opt-in; the candidate sets and
#: search depth stay desk-scale below it.
DEFAULT_SIZE_LIMIT = 16

#: Hard ceiling for enumeration caps.
CAP_CEILING = 10**6

UNKNOWN = -1
_LETTER_BIT = {A: 0, B: 1}
_BIT_LETTER = (A, B)


class Uniqueness(enum.Enum):
    ZERO = "zero"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


class WildVerdict(enum.Enum):
    VALID = "valid"
    INVALID = "invalid"


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    initial_candidates: tuple[int, ...]


@dataclass(frozen=True)
class SolveResult:
    count: int
    solutions: tuple[Solution, ...]
    truncated: bool
    stats: SolveStats


@lru_cache(maxsize=None)
def _words_both_orders(length: int) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Candidate words of one line length: ALT words in ALT order, then BLT words
    in BLT order, with duplicates (single letters) dropped; plus their masks."""
    alt = enumerate_lyndon(length, Order.ALT)
    blt = [w for w in enumerate_lyndon(length, Order.BLT) if length > 1]
    words = tuple(alt + blt)
    masks = tuple(
        sum(1 << p for p, ch in enumerate(w) if ch == B) for w in words
    )
    return words, masks


def _line_candidates(
    length: int,
    a_count: int | None,
    forbidden: tuple[str, ...],
) -> list[int]:
    words, masks = _words_both_orders(length)
    out = []
    for w, mask in zip(words, masks):
        if a_count is not None and length - bin(mask).count("1") != a_count:
            continue
        if any(f in w for f in forbidden):
            continue
        out.append(mask)
    return out


class _Line:
    __slots__ = ("ref", "cells", "length")

    def __init__(self, ref: LineRef, cells: list[int]):
        self.ref = ref
        self.cells = cells
        self.length = len(cells)


def _build_lines(puzzle: Puzzle, size_limit: int) -> list[_Line]:
    if puzzle.n > size_limit or puzzle.m > size_limit:
        raise LimitError(
            f"{puzzle.n}x{puzzle.m} exceeds the size limit {size_limit}; "
            "raise size_limit explicitly for larger searches"
        )
    lines = []
    for ref in line_refs(puzzle.n, puzzle.m, puzzle.box_dims):
        coords = line_cells(ref, puzzle.n, puzzle.m, puzzle.box_dims)
        if len(coords) > DEFAULT_ENUMERATION_BOUND:
            raise LimitError(
                f"line {ref} has length {len(coords)}, beyond the enumeration bound"
            )
        lines.append(_Line(ref, [i * puzzle.m + j for i, j in coords]))
    return lines


def solve(
    puzzle: Puzzle,
    cap: int = 2,
    *,
    max_nodes: int | None = None,
    size_limit: int = DEFAULT_SIZE_LIMIT,
    collect: bool = True,
    shuffle: SplitMix64 | None = None,
) -> SolveResult:
    """Find up to ``cap`` solutions of ``puzzle``.

    Deterministic: candidates are tried in lexicographic order (ALT words
    first, then BLT words), and the branching line is the one with the fewest
    candidates, ties broken rows before cols before boxes, low index first.
    ``shuffle`` reorders every candidate list up front (used by the seeded
    generator).  ``max_nodes`` bounds the search tree and raises
    :class:`BudgetExceededError` beyond it.  With ``collect=False`` only the
    count is produced.

    Wildcard cells are treated as free cells here: a solution may put either
    letter there.  Validating a wildcard puzzle's bivalence contract is
    :func:`wild_check`'s job.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if cap > CAP_CEILING:
        raise LimitError(f"cap {cap} exceeds the ceiling {CAP_CEILING}")

    lines = _build_lines(puzzle, size_limit)
    n, m = puzzle.n, puzzle.m
    flat = "".join(puzzle.cells)

    # Per-cell list of (line index, position within the line).
    cell_lines: list[list[tuple[int, int]]] = [[] for _ in range(n * m)]
    for li, line in enumerate(lines):
        for pos, cell in enumerate(line.cells):
            cell_lines[cell].append((li, pos))

    cands: list[list[int]] = []
    for line in lines:
        a_count = None
        if line.ref.kind == ROW and puzzle.row_acounts is not None:
            a_count = puzzle.row_acounts[line.ref.index]
        elif line.ref.kind == COL and puzzle.col_acounts is not None:
            a_count = puzzle.col_acounts[line.ref.index]
        masks = _line_candidates(line.length, a_count, puzzle.forbidden_factors)
        want_bits = [
            (pos, _LETTER_BIT[flat[cell]])
            for pos, cell in enumerate(line.cells)
            if flat[cell] in (A, B)
        ]
        if want_bits:
            masks = [
                w
                for w in masks
                if all((w >> pos) & 1 == bit for pos, bit in want_bits)
            ]
        cands.append(masks)

    if shuffle is not None:
        for masks in cands:
            shuffle.shuffle(masks)

    stats_initial = tuple(len(c) for c in cands)

    cells0 = [UNKNOWN] * (n * m)
    for idx, ch in enumerate(flat):
        if ch in (A, B):
            cells0[idx] = _LETTER_BIT[ch]
    unknown0 = cells0.count(UNKNOWN)

    nodes = 0
    count = 0
    truncated = False
    solutions: list[Solution] = []

    def propagate(cands, cells, dirty, unknown: int) -> int:
        """Commit forced letters until stable.  Returns the new unknown count,
        or -1 on contradiction."""
        while dirty:
            li = dirty.pop()
            masks = cands[li]
            if not masks:
                return -1
            and_mask = or_mask = masks[0]
            for w in masks[1:]:
                and_mask &= w
                or_mask |= w
            line = lines[li]
            for pos in range(line.length):
                bit = (and_mask >> pos) & 1
                if bit != (or_mask >> pos) & 1:
                    continue  # both letters still possible here
                cell = line.cells[pos]
                if cells[cell] == bit:
                    continue
                if cells[cell] != UNKNOWN:
                    return -1
                cells[cell] = bit
                unknown -= 1
                for lj, p2 in cell_lines[cell]:
                    if lj == li:
                        continue
                    other = cands[lj]
                    kept = [w for w in other if (w >> p2) & 1 == bit]
                    if len(kept) != len(other):
                        if not kept:
                            return -1
                        cands[lj] = kept
                        dirty.add(lj)
        return unknown

    def record(cells) -> None:
        nonlocal count
        count += 1
        if not collect:
            return
        rows = tuple(
            "".join(_BIT_LETTER[cells[i * m + j]] for j in range(m)) for i in range(n)
        )
        orders = {}
        for line in lines:
            word = "".join(_BIT_LETTER[cells[c]] for c in line.cells)
            orders[line.ref] = line_order(word)
        solutions.append(Solution(rows, orders))

    def search(cands, cells, unknown: int) -> bool:
        """Depth-first enumeration; returns False when the cap cut the search."""
        nonlocal nodes, truncated
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceededError(f"solve exceeded the {max_nodes}-node budget")
        if unknown == 0:
            record(cells)
            return count < cap
        best = None
        best_len = None
        for li, masks in enumerate(cands):
            k = len(masks)
            if k > 1 and (best_len is None or k < best_len):
                best, best_len = li, k
        assert best is not None  # propagation commits every single-candidate line
        masks = cands[best]
        for i, w in enumerate(masks):
            cands2 = [c[:] for c in cands]
            cells2 = cells[:]
            cands2[best] = [w]
            unknown2 = propagate(cands2, cells2, {best}, unknown)
            if unknown2 < 0:
                continue
            if not search(cands2, cells2, unknown2):
                if i + 1 < len(masks):
                    truncated = True
                return False
        return True

    unknown = propagate(cands, cells0, set(range(len(lines))), unknown0)
    if unknown >= 0:
        search(cands, cells0, unknown)
    return SolveResult(count, tuple(solutions), truncated, SolveStats(nodes, stats_initial))


def is_unique(puzzle: Puzzle, **solve_kwargs) -> Uniqueness:
    """Zero, exactly one, or several solutions (solve with cap 2)."""
    result = solve(puzzle, cap=2, collect=False, **solve_kwargs)
    if result.count == 0:
        return Uniqueness.ZERO
    return Uniqueness.UNIQUE if result.count == 1 else Uniqueness.MULTIPLE


def count_full_grids(n: int, m: int, *, size_limit: int = 8) -> int:
    """Exact number of full n x m letter grids whose rows and columns are all Lyndon words."""
    if n > size_limit or m > size_limit:
        raise LimitError(
            f"{n}x{m} full-grid counting exceeds the size limit {size_limit}"
        )
    result = solve(empty_puzzle(n, m), cap=CAP_CEILING, collect=False)
    if result.truncated:  # pragma: no cover - unreachable at permitted sizes
        raise LimitError("solution count exceeds the enumeration ceiling")
    return result.count


def scheme_star_cells(n: int, m: int) -> list[tuple[int, int]]:
    """Free cells of the block construction, row-major."""
    return [(i, j) for i in range(n // 2, n - 1) for j in range(m // 2, m - 1)]


def scheme_star_count(n: int, m: int) -> int:
    return max(0, n - 1 - n // 2) * max(0, m - 1 - m // 2)


def scheme_grid(n: int, m: int, stars: str | None = None) -> tuple[str, ...]:
    """The block grid whose free cells each independently take either letter.

    Top-left floor(n/2) x floor(m/2) block is all ``a``, top-right all ``b``,
    bottom-left all ``b``; in the bottom-right block the last column and the
    bottom row are ``a`` and the interior cells come from ``stars`` (row-major,
    ``a``/``b`` or ``0``/``1``).  Every assignment yields a grid whose rows and
    columns are all Lyndon words, which gives the exponential lower bound on
    the number of full solutions.
    """
    if n < 2 or m < 2:
        raise PuzzleError("the block construction needs n, m >= 2")
    want = scheme_star_count(n, m)
    if stars is None:
        stars = A * want
    stars = stars.translate(str.maketrans("01", "ab"))
    if len(stars) != want or set(stars) - {A, B}:
        raise PuzzleError(f"expected {want} star letters over 'a'/'b', got {stars!r}")
    top = A * (m // 2) + B * (m - m // 2)
    bottom = B * (m // 2) + A * (m - m // 2)
    rows = [top] * (n // 2)
    width = m - 1 - m // 2
    for r in range(n - 1 - n // 2):
        block = stars[r * width : (r + 1) * width]
        rows.append(B * (m // 2) + block + A)
    rows.append(bottom)
    return tuple(rows)


def wild_check(puzzle: Puzzle, *, max_wild: int = 12, **solve_kwargs) -> WildVerdict:
    """Validate a wildcard puzzle's contract.

    Valid when, for every assignment of letters to the wildcard cells, the
    remaining holes admit exactly one completion, and that completion of the
    non-wild cells is the same across all assignments.
    """
    wilds = puzzle.wild_cells
    if len(wilds) > max_wild:
        raise LimitError(f"{len(wilds)} wildcards exceed the bound {max_wild}")
    reference: tuple[str, ...] | None = None
    for letters in product((A, B), repeat=len(wilds)):
        rows = [list(r) for r in puzzle.cells]
        for (i, j), letter in zip(wilds, letters):
            rows[i][j] = letter
        candidate = puzzle.with_cells("".join(r) for r in rows)
        result = solve(candidate, cap=2, **solve_kwargs)
        if result.count != 1:
            return WildVerdict.INVALID
        solved = [list(r) for r in result.solutions[0].cells]
        for i, j in wilds:
            solved[i][j] = WILD_CELL
        blanked = tuple("".join(r) for r in solved)
        if reference is None:
            reference = blanked
        elif blanked != reference:
            return WildVerdict.INVALID
    return WildVerdict.VALID
