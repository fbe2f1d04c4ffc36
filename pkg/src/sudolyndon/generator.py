"""Seeded puzzle generation, clue minimality, and the minimal-clue function.

Generation samples a full valid grid (first solution of the empty puzzle with
seeded candidate order), starts from every cell as a clue, then walks the
cells in seeded random order deleting each clue whose removal keeps the
solution unique.  One full pass is already 1-minimal: a clue kept because its
removal broke uniqueness can never become removable later, since dropping
other clues only grows the solution set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import LimitError, NotUniqueError, PuzzleError
from .grid import A, HOLE_CELL, Puzzle, Solution, empty_puzzle
from .rng import SplitMix64
from .solver import CAP_CEILING, Uniqueness, is_unique, solve

VARIANTS = ("base", "counts", "boxes")


@dataclass(frozen=True)
class GenConfig:
    n: int
    m: int
    variant: str = "base"
    seed: int = 0
    minimize: bool = False
    max_attempts: int = 100
    box_dims: tuple[int, int] | None = None

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise PuzzleError("grid dimensions must be positive")
        if self.variant not in VARIANTS:
            raise PuzzleError(f"variant must be one of {VARIANTS}")
        if self.variant == "boxes" and self.box_dims is None:
            raise PuzzleError("the boxes variant needs box dimensions")
        if self.max_attempts < 1:
            raise PuzzleError("max_attempts must be positive")


class Generated(NamedTuple):
    puzzle: Puzzle
    solution: Solution


def generate(config: GenConfig) -> Generated:
    """A puzzle with exactly one solution, deterministic per seed.

    ``minimize`` verifies 1-minimality on top of the construction (which
    already guarantees it; the check is cheap insurance and surfaces in the
    returned puzzle's tests).  For the ``counts`` variant the full grid's
    a-counts are attached before clue deletion, which usually deletes every
    clue cell.
    """
    rng = SplitMix64(config.seed)
    box_dims = config.box_dims if config.variant == "boxes" else None
    skeleton = empty_puzzle(config.n, config.m, box_dims=box_dims)

    first = None
    for _ in range(config.max_attempts):
        result = solve(skeleton, cap=1, shuffle=rng)
        if result.count:
            first = result.solutions[0]
            break
    if first is None:
        raise LimitError(
            f"no full {config.n}x{config.m} grid found in {config.max_attempts} attempts"
        )

    full = first.cells
    row_acounts = col_acounts = None
    if config.variant == "counts":
        row_acounts = tuple(row.count(A) for row in full)
        col_acounts = tuple(col.count(A) for col in map("".join, zip(*full)))

    def as_puzzle(cells: tuple[str, ...]) -> Puzzle:
        return Puzzle(
            config.n, config.m, cells, row_acounts, col_acounts, box_dims, ()
        )

    cells = [list(row) for row in full]
    order = [(i, j) for i in range(config.n) for j in range(config.m)]
    rng.shuffle(order)
    for i, j in order:
        kept = cells[i][j]
        cells[i][j] = HOLE_CELL
        trial = as_puzzle(tuple("".join(r) for r in cells))
        if is_unique(trial) is not Uniqueness.UNIQUE:
            cells[i][j] = kept

    puzzle = as_puzzle(tuple("".join(r) for r in cells))
    if config.minimize:
        minimal, witness = is_minimal(puzzle)
        assert minimal, f"clue {witness} is removable after the deletion pass"
    return Generated(puzzle, first)


class MinimalityReport(NamedTuple):
    minimal: bool
    witness: tuple[int, int] | None  # a removable clue, when not minimal


def is_minimal(puzzle: Puzzle) -> MinimalityReport:
    """Whether removing any single clue breaks uniqueness.

    Requires the puzzle to be uniquely solvable; raises
    :class:`NotUniqueError` otherwise.
    """
    if is_unique(puzzle) is not Uniqueness.UNIQUE:
        raise NotUniqueError("minimality is defined only for uniquely solvable puzzles")
    cells = [list(row) for row in puzzle.cells]
    for i, j in puzzle.clue_cells:
        kept = cells[i][j]
        cells[i][j] = HOLE_CELL
        trial = puzzle.with_cells(tuple("".join(r) for r in cells))
        cells[i][j] = kept
        if is_unique(trial) is Uniqueness.UNIQUE:
            return MinimalityReport(False, (i, j))
    return MinimalityReport(True, None)


def _all_full_grids(n: int, m: int) -> list[tuple[str, ...]]:
    result = solve(empty_puzzle(n, m), cap=CAP_CEILING)
    return [s.cells for s in result.solutions]


def f_min(n: int, m: int, *, max_pairs: int = 5_000_000) -> int:
    """Exact minimal clue count over all n x m grids admitting a unique puzzle.

    Iterates k upward over every (full valid grid, k-subset of cells) pair;
    a clue set is uniquely solvable exactly when it matches exactly one of
    the enumerated grids.  Raises :class:`LimitError` when the pair budget
    would be exceeded.
    """
    grids = _all_full_grids(n, m)
    keys = [tuple(g) for g in grids]
    coords = [(i, j) for i in range(n) for j in range(m)]
    pairs = 0
    for k in range(0, n * m + 1):
        for subset in combinations(coords, k):
            seen: dict[tuple[str, ...], int] = {}
            for key in keys:
                clue_key = tuple(key[i][j] for i, j in subset)
                seen[clue_key] = seen.get(clue_key, 0) + 1
            pairs += len(keys)
            if pairs > max_pairs:
                raise LimitError(
                    f"exhaustive f({n},{m}) needs more than {max_pairs} grid/subset pairs"
                )
            if any(v == 1 for v in seen.values()):
                return k
    raise PuzzleError(f"no uniquely solvable clue set exists for {n}x{m}")


def f_min_estimate(n: int, m: int, *, trials: int = 16, seed: int = 0) -> int:
    """Upper bound on the minimal clue count: best of ``trials`` seeded minimized puzzles."""
    best = n * m
    for t in range(trials):
        generated = generate(GenConfig(n, m, seed=seed + t, minimize=True))
        best = min(best, len(generated.puzzle.clue_cells))
    return best
