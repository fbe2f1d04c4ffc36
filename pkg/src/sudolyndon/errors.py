"""Exception hierarchy shared across the package."""


class SudoLyndonError(Exception):
    """Base class for all errors raised by this package."""


class WordError(SudoLyndonError, ValueError):
    """A word or partial word is malformed (empty or has letters outside the alphabet)."""


class PuzzleError(SudoLyndonError, ValueError):
    """A puzzle violates a structural invariant (dimensions, counts, boxes, wildcards)."""


class PuzzleFormatError(PuzzleError):
    """A puzzle file failed to parse.  Carries the 1-based source location."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)


class IncompleteGridError(SudoLyndonError, ValueError):
    """A full letter grid was required but the input still contains holes."""


class LimitError(SudoLyndonError):
    """A configured bound was exceeded (enumeration length, hole count, grid size, cap)."""


class BudgetExceededError(LimitError):
    """A solve call ran past its node budget."""


class NotUniqueError(SudoLyndonError):
    """An operation requiring a uniquely solvable puzzle was given one that is not."""
