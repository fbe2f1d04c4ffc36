"""Sudo-Lyndon: generate, solve, hint and verify grids of Lyndon words."""

from .errors import (
    BudgetExceededError,
    IncompleteGridError,
    LimitError,
    NotUniqueError,
    PuzzleError,
    PuzzleFormatError,
    SudoLyndonError,
    WordError,
)
from .generator import GenConfig, Generated, MinimalityReport, f_min, f_min_estimate, generate, is_minimal
from .grid import (
    GridReport,
    LineRef,
    LineVerdict,
    Puzzle,
    Solution,
    Variant,
    check_grid,
    empty_puzzle,
    extract_line,
    line_status,
    parse_puzzle,
    puzzle_from_json,
    puzzle_to_json,
    render_puzzle,
    solution_to_json,
)
from .hints import Deduction, Hint, apply_named_rules, deduce_by_candidates, next_hint
from .partial import (
    Completions,
    completions_to_lyndon,
    family_partial_word,
    family_solution,
    has_lyndon_completion,
)
from .solver import (
    SolveResult,
    Uniqueness,
    WildVerdict,
    count_full_grids,
    is_unique,
    scheme_grid,
    scheme_star_count,
    solve,
    wild_check,
)
from .words import (
    Order,
    count_lyndon,
    enumerate_lyndon,
    is_lyndon,
    is_lyndon_general,
    is_primitive,
    is_unbordered,
    lex_compare,
    swap_letters,
)

__version__ = "0.1.0"
