import warnings

import pytest

from conftest import load_fixture
from sudolyndon import (
    GenConfig,
    NotUniqueError,
    PuzzleError,
    Uniqueness,
    f_min,
    f_min_estimate,
    generate,
    is_minimal,
    is_unique,
    render_puzzle,
    solve,
)
from sudolyndon.grid import DegenerateGridWarning, Puzzle, empty_puzzle
from sudolyndon.partial import family_partial_word, family_solution

# Frozen output of the exhaustive search; new data, recomputed on every run.
F_MIN_3X3 = 4


class TestGenerate:
    def test_deterministic_per_seed(self):
        a = generate(GenConfig(4, 4, seed=11))
        b = generate(GenConfig(4, 4, seed=11))
        assert render_puzzle(a.puzzle) == render_puzzle(b.puzzle)
        assert a.solution.cells == b.solution.cells

    def test_seeds_reach_distinct_solutions(self):
        seen = {generate(GenConfig(4, 4, seed=s)).solution.cells for s in range(30)}
        assert len(seen) >= 2

    @pytest.mark.parametrize("seed", range(8))
    def test_unique_and_solution_consistent(self, seed):
        generated = generate(GenConfig(4, 4, seed=seed))
        assert is_unique(generated.puzzle) is Uniqueness.UNIQUE
        result = solve(generated.puzzle, cap=2)
        assert result.solutions[0].cells == generated.solution.cells

    @pytest.mark.parametrize("seed", range(4))
    def test_minimize_yields_minimal(self, seed):
        generated = generate(GenConfig(5, 5, seed=seed, minimize=True))
        report = is_minimal(generated.puzzle)
        assert report.minimal and report.witness is None

    def test_counts_variant(self):
        generated = generate(GenConfig(5, 5, variant="counts", seed=3))
        puzzle = generated.puzzle
        assert puzzle.row_acounts is not None and puzzle.col_acounts is not None
        assert puzzle.variant.value in ("counts", "countsPlusClues")
        assert is_unique(puzzle) is Uniqueness.UNIQUE

    def test_boxes_variant(self):
        generated = generate(GenConfig(6, 6, variant="boxes", seed=2, box_dims=(2, 3)))
        assert generated.puzzle.box_dims == (2, 3)
        assert is_unique(generated.puzzle) is Uniqueness.UNIQUE

    def test_degenerate_1x1(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateGridWarning)
            generated = generate(GenConfig(1, 1, seed=0))
        assert len(generated.puzzle.clue_cells) == 1
        assert is_unique(generated.puzzle) is Uniqueness.UNIQUE

    def test_config_validation(self):
        with pytest.raises(PuzzleError):
            GenConfig(0, 4)
        with pytest.raises(PuzzleError):
            GenConfig(4, 4, variant="nope")
        with pytest.raises(PuzzleError):
            GenConfig(4, 4, variant="boxes")


class TestIsMinimal:
    def test_full_grid_not_minimal(self):
        puzzle = load_fixture("paper_4x4_solution.sl")
        report = is_minimal(puzzle)
        assert not report.minimal
        assert report.witness is not None

    def test_witness_is_removable(self):
        puzzle = load_fixture("paper_4x4_solution.sl")
        report = is_minimal(puzzle)
        i, j = report.witness
        rows = [list(r) for r in puzzle.cells]
        rows[i][j] = "."
        trimmed = puzzle.with_cells(tuple("".join(r) for r in rows))
        assert is_unique(trimmed) is Uniqueness.UNIQUE

    def test_paper_4x4_is_minimal(self, paper_4x4):
        # Each of the four clues is essential; removing any admits several grids.
        report = is_minimal(paper_4x4)
        assert report.minimal

    def test_precondition(self):
        with pytest.raises(NotUniqueError):
            is_minimal(empty_puzzle(2, 2))


class TestFMin:
    def test_known_tiny_values(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateGridWarning)
            assert f_min(1, 1) == 1
        assert f_min(2, 2) == 1

    def test_3x3_regression_constant(self):
        assert f_min(3, 3) == F_MIN_3X3

    def test_zero_clues_never_unique(self):
        # The letter swap pairs up solutions of any clue-free puzzle.
        for n, m in [(1, 1), (2, 2), (2, 3), (3, 3)]:
            assert is_unique(empty_puzzle(n, m)) is not Uniqueness.UNIQUE

    def test_estimate_bounds_exhaustive(self):
        assert f_min_estimate(2, 2, trials=6) >= f_min(2, 2)
        assert f_min_estimate(3, 3, trials=6) >= F_MIN_3X3

    def test_family_gives_1d_bound(self):
        # The p=1 family instance is a uniquely solvable 1x14 puzzle with 4 clues.
        pw = family_partial_word(1)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateGridWarning)
            puzzle = Puzzle(1, 14, (pw.replace("?", "."),))
            result = solve(puzzle, cap=2)
        assert result.count == 1
        assert result.solutions[0].cells == (family_solution(1),)
        assert len(puzzle.clue_cells) == 4
