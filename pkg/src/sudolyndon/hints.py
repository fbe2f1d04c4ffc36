"""Named deduction rules for play, plus a candidate-intersection fallback.

The named rules capture the hand-solving observations: a Lyndon word's first
and last letters differ (R0); a word shaped ``?a...b?`` must start ``aa`` and
end ``bb`` (R1); a word starting ``ab`` must end ``bb`` (R2); and a word
starting ``a^k b`` never contains ``a^(k+1)`` as a factor (R4).  Each rule
also applies through the letter swap to lines oriented the other way.  The
fallback enumerates all Lyndon completions of a line and reports positions
that take the same letter in every one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import LimitError, WordError
from .grid import A, B, COL, ROW, LineRef, Puzzle, extract_line, swap_letters
from .partial import HOLE, iter_lyndon_completions, parse_partial_word
from .words import DEFAULT_ENUMERATION_BOUND, Order

R0_ENDPOINTS = "R0_Endpoints"
R1 = "R1"
R2 = "R2"
R4_FACTOR_BOUND = "R4_FactorBound"
LINE_INTERSECTION = "LineIntersection"

EXHAUSTED = "exhausted"
CONTRADICTION = "contradiction"
DEDUCTION = "deduction"


class Assignment(NamedTuple):
    line: LineRef | None
    pos: int
    letter: str


@dataclass(frozen=True)
class Deduction:
    rule: str
    assignments: tuple[Assignment, ...]
    explanation: str

    def with_line(self, ref: LineRef) -> "Deduction":
        return Deduction(
            self.rule,
            tuple(Assignment(ref, a.pos, a.letter) for a in self.assignments),
            self.explanation,
        )


@dataclass(frozen=True)
class Hint:
    """Outcome of a hint request: a deduction, exhausted, or a contradiction."""

    status: str  # DEDUCTION, EXHAUSTED or CONTRADICTION
    deduction: Deduction | None = None
    line: LineRef | None = None


def _describe(ref: LineRef | None) -> str:
    if ref is None:
        return "the line"
    return f"{ref.kind} {ref.index + 1}"


def apply_named_rules(line: str, ref: LineRef | None = None) -> list[Deduction]:
    """Every named rule that fires on ``line``, in precedence order R0, R1, R2, R4.

    ``line`` is a partial word of length >= 2; assignments target holes only.
    """
    pw = parse_partial_word(line)
    n = len(pw)
    if n < 2:
        raise WordError("named rules need lines of length at least 2")
    where = _describe(ref)
    out: list[Deduction] = []

    first, last = pw[0], pw[-1]
    if first != HOLE and last == HOLE:
        letter = swap_letters(first)
        out.append(
            Deduction(
                R0_ENDPOINTS,
                (Assignment(ref, n - 1, letter),),
                f"R0: a Lyndon word's first and last letters differ, so {where} "
                f"starting with {first} must end with {letter}.",
            )
        )
    elif last != HOLE and first == HOLE:
        letter = swap_letters(last)
        out.append(
            Deduction(
                R0_ENDPOINTS,
                (Assignment(ref, 0, letter),),
                f"R0: a Lyndon word's first and last letters differ, so {where} "
                f"ending with {last} must start with {letter}.",
            )
        )

    if n >= 4 and first == HOLE and last == HOLE:
        second, penult = pw[1], pw[-2]
        if second in (A, B) and penult == swap_letters(second):
            out.append(
                Deduction(
                    R1,
                    (
                        Assignment(ref, 0, second),
                        Assignment(ref, n - 1, penult),
                    ),
                    f"R1: a word shaped ?{second}...{penult}? must double up its "
                    f"ends, so {where} starts {second}{second} and ends "
                    f"{penult}{penult}.",
                )
            )

    if n >= 4 and first in (A, B) and pw[1] == swap_letters(first):
        if pw[-1] == HOLE and pw[-2] == HOLE:
            tail = pw[1]
            out.append(
                Deduction(
                    R2,
                    (
                        Assignment(ref, n - 2, tail),
                        Assignment(ref, n - 1, tail),
                    ),
                    f"R2: any Lyndon word starting {first}{tail} ends {tail}{tail}, "
                    f"so the last two cells of {where} are {tail}.",
                )
            )

    r4 = _factor_bound(pw, ref, where)
    if r4 is not None:
        out.append(r4)
    return out


def _factor_bound(pw: str, ref: LineRef | None, where: str) -> Deduction | None:
    """R4: a line committed to start x^k y cannot contain x^(k+1)."""
    prefix_end = pw.find(HOLE)
    prefix = pw if prefix_end < 0 else pw[:prefix_end]
    if len(prefix) < 2:
        return None
    head = prefix[0]
    k = len(prefix) - len(prefix.lstrip(head))
    if k >= len(prefix) or prefix[k] != swap_letters(head):
        return None
    window = k + 1
    forced: dict[int, str] = {}
    other = swap_letters(head)
    for start in range(len(pw) - window + 1):
        chunk = pw[start : start + window]
        if chunk.count(head) == window - 1 and chunk.count(HOLE) == 1:
            forced[start + chunk.index(HOLE)] = other
    if not forced:
        return None
    assignments = tuple(
        Assignment(ref, pos, letter) for pos, letter in sorted(forced.items())
    )
    return Deduction(
        R4_FACTOR_BOUND,
        assignments,
        f"R4: {where} starts with {head * k}{other}, so {head * (k + 1)} cannot "
        f"appear; each window of {window} cells with {k} known {head}s forces its "
        f"hole to {other}.",
    )


def deduce_by_candidates(
    line: str,
    ref: LineRef | None = None,
    *,
    a_count: int | None = None,
    forbidden: tuple[str, ...] = (),
) -> list[Deduction]:
    """Positions forced to one letter across every Lyndon completion of ``line``.

    Completions under both orders are pooled.  Returns nothing when the line
    has no completion at all (that is a contradiction, not a deduction).
    """
    pw = parse_partial_word(line)
    if len(pw) > DEFAULT_ENUMERATION_BOUND:
        raise LimitError(
            f"line of length {len(pw)} is beyond the enumeration bound"
        )
    seen_any = False
    possible: list[set[str]] = [set() for _ in pw]
    for order in (Order.ALT, Order.BLT):
        for word in iter_lyndon_completions(pw, order, a_count=a_count, forbidden=forbidden):
            seen_any = True
            for i, ch in enumerate(word):
                possible[i].add(ch)
    if not seen_any:
        return []
    assignments = tuple(
        Assignment(ref, i, next(iter(p)))
        for i, (p, ch) in enumerate(zip(possible, pw))
        if ch == HOLE and len(p) == 1
    )
    if not assignments:
        return []
    where = _describe(ref)
    cells = ", ".join(f"cell {a.pos + 1} = {a.letter}" for a in assignments)
    return [
        Deduction(
            LINE_INTERSECTION,
            assignments,
            f"Every Lyndon completion of {where} agrees on: {cells}.",
        )
    ]


def _line_constraints(puzzle: Puzzle, ref: LineRef) -> dict:
    a_count = None
    if ref.kind == ROW and puzzle.row_acounts is not None:
        a_count = puzzle.row_acounts[ref.index]
    elif ref.kind == COL and puzzle.col_acounts is not None:
        a_count = puzzle.col_acounts[ref.index]
    return {"a_count": a_count, "forbidden": puzzle.forbidden_factors}


def _drop_subsumed(deductions: list[Deduction]) -> list[Deduction]:
    """Drop deductions whose assignments are a strict subset of another's.

    When the same line fires R0 and R2, R2 repeats R0's cell and adds one, so
    showing R0 first would teach less while forcing a second hint request.
    """
    keyed = [
        (d, {(a.pos, a.letter) for a in d.assignments}) for d in deductions
    ]
    return [
        d
        for d, cells in keyed
        if not any(cells < other for _, other in keyed)
    ]


def _completable(pattern: str, constraints: dict) -> bool:
    return any(
        next(iter_lyndon_completions(pattern, order, **constraints), None) is not None
        for order in (Order.ALT, Order.BLT)
    )


def next_hint(puzzle: Puzzle, board: Sequence[str]) -> Hint:
    """The first applicable deduction for the current board.

    Precedence: any named rule beats the candidate intersection; within each
    pass lines are scanned rows, then columns, then boxes, low index first.
    A line with no Lyndon completion short-circuits to a contradiction.
    Wildcard cells are treated as holes.
    """
    board = tuple(board)
    refs = puzzle.line_refs()
    patterns: dict[LineRef, str] = {}
    for ref in refs:
        pattern = extract_line(board, ref, puzzle.box_dims)
        patterns[ref] = pattern
        if not _completable(pattern, _line_constraints(puzzle, ref)):
            return Hint(CONTRADICTION, line=ref)

    for ref in refs:
        pattern = patterns[ref]
        if len(pattern) < 2 or HOLE not in pattern:
            continue
        deductions = _drop_subsumed(apply_named_rules(pattern, ref))
        if deductions:
            return Hint(DEDUCTION, deductions[0])

    for ref in refs:
        pattern = patterns[ref]
        if HOLE not in pattern:
            continue
        deductions = deduce_by_candidates(pattern, ref, **_line_constraints(puzzle, ref))
        if deductions:
            return Hint(DEDUCTION, deductions[0])

    return Hint(EXHAUSTED)
