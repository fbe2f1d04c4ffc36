"""Partial words (words with holes) and Lyndon completion search.

A partial word is a string over {a, b, ?} where ``?`` marks an undetermined
position.  The completion search fills every hole and keeps the assignments
whose result is a Lyndon word under a given order.  Also hosts the
one-dimensional sparse-clue family whose clue density vanishes as its
parameter grows.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import LimitError, WordError
from .words import A, B, Order, parse_word

HOLE = "?"
_PARTIAL_ALPHABET = frozenset((A, B, HOLE))

#: Hole cap for exhaustive completion search.  Callers with a pruned-search
#: budget in mind may raise it per call (pass ``max_holes=None`` to disable).
DEFAULT_HOLE_BOUND = 24


class Completions(NamedTuple):
    words: list[str]
    truncated: bool


class CompletionExistence(NamedTuple):
    """Whether a partial word completes to a Lyndon word, per order."""

    alt: bool
    blt: bool


def parse_partial_word(text: str) -> str:
    """Validate ``text`` as a partial word: nonempty over {a, b, ?}."""
    if not isinstance(text, str):
        raise WordError(f"expected a string, got {type(text).__name__}")
    if not text:
        raise WordError("partial words must be nonempty")
    bad = set(text) - _PARTIAL_ALPHABET
    if bad:
        raise WordError(
            f"illegal characters {sorted(bad)!r}; partial words use 'a', 'b' and '?'"
        )
    return text


def hole_positions(pw: str) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(pw) if c == HOLE)


def iter_lyndon_completions(
    pw: str,
    order: Order = Order.ALT,
    *,
    a_count: int | None = None,
    forbidden: tuple[str, ...] = (),
) -> Iterator[str]:
    """Yield every hole assignment of ``pw`` that is Lyndon under ``order``.

    Deterministic order: holes are filled left to right, trying the order's
    smaller letter first, so words appear in lexicographic order under
    ``order``.  The search maintains Duval's matched-prefix pointer while it
    extends the word, cutting any prefix that already has a suffix smaller
    than the whole; a finished word is Lyndon exactly when the pointer is
    back at zero.

    ``a_count`` restricts results to words with that many ``a`` letters;
    ``forbidden`` drops words containing any of the given factors.
    """
    parse_partial_word(pw)
    n = len(pw)
    small, large = order.letters
    buf = list(pw)
    max_factor = max((len(f) for f in forbidden), default=0)

    def rec(pos: int, k: int, n_a: int) -> Iterator[str]:
        if pos == n:
            if k == 0 and (a_count is None or n_a == a_count):
                yield "".join(buf)
            return
        fixed = pw[pos]
        choices = (fixed,) if fixed != HOLE else (small, large)
        for c in choices:
            if pos == 0:
                if n > 1 and c == large:
                    continue  # length >= 2 Lyndon words start with the smaller letter
                k2 = 0
            else:
                ck = buf[k]
                if ck == c:
                    k2 = k + 1
                elif (ck == small) and (c == large):
                    k2 = 0
                else:
                    continue  # the suffix starting at pos-k is now smaller than the word
            buf[pos] = c
            n_a2 = n_a + (c == A)
            if a_count is not None:
                if n_a2 > a_count or n_a2 + (n - pos - 1) < a_count:
                    buf[pos] = fixed
                    continue
            if max_factor and _completes_forbidden(buf, pos, forbidden, max_factor):
                buf[pos] = fixed
                continue
            yield from rec(pos + 1, k2, n_a2)
            buf[pos] = fixed

    return rec(0, 0, 0)


def _completes_forbidden(
    buf: list[str], pos: int, forbidden: tuple[str, ...], max_factor: int
) -> bool:
    lo = max(0, pos + 1 - max_factor)
    window = "".join(buf[lo : pos + 1])
    return any(window.endswith(f) for f in forbidden)


def completions_to_lyndon(
    pw: str,
    order: Order = Order.ALT,
    limit: int = 2,
    *,
    max_holes: int | None = DEFAULT_HOLE_BOUND,
) -> Completions:
    """Up to ``limit`` Lyndon completions of ``pw`` under ``order``.

    ``truncated`` is True exactly when further completions exist beyond the
    returned ones.  Raises :class:`LimitError` when the hole count exceeds
    ``max_holes``.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    parse_partial_word(pw)
    n_holes = pw.count(HOLE)
    if max_holes is not None and n_holes > max_holes:
        raise LimitError(f"{n_holes} holes exceed the bound {max_holes}")
    out: list[str] = []
    truncated = False
    for word in iter_lyndon_completions(pw, order):
        if len(out) == limit:
            truncated = True
            break
        out.append(word)
    return Completions(out, truncated)


def has_lyndon_completion(
    pw: str, *, max_holes: int | None = DEFAULT_HOLE_BOUND
) -> CompletionExistence:
    """Whether at least one Lyndon completion exists, for each order."""
    parse_partial_word(pw)
    n_holes = pw.count(HOLE)
    if max_holes is not None and n_holes > max_holes:
        raise LimitError(f"{n_holes} holes exceed the bound {max_holes}")
    found = []
    for order in (Order.ALT, Order.BLT):
        found.append(next(iter_lyndon_completions(pw, order), None) is not None)
    return CompletionExistence(*found)


def family_partial_word(p: int) -> str:
    """The sparse one-dimensional puzzle a b^p ? a ?^(2p+2) (a ?^(2p+3))^p.

    Length 2p^2 + 7p + 5 with only 2p + 2 determined letters, so the clue
    density tends to zero as p grows.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    parts = [A, B * p, HOLE, A, HOLE * (2 * p + 2)]
    parts.extend([A, HOLE * (2 * p + 3)] * p)
    return "".join(parts)


def family_solution(p: int) -> str:
    """The unique a<b completion of :func:`family_partial_word`: a b^(p+1) a b^(2p+2) (a b^(2p+3))^p."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    parts = [A, B * (p + 1), A, B * (2 * p + 2)]
    parts.extend([A, B * (2 * p + 3)] * p)
    return parse_word("".join(parts))
