"""Independent reference implementations the package is tested against.

Everything here works from definitions: suffix comparisons for the Lyndon
property, exhaustive enumeration for completions and grids.  Nothing imports
the package's fast paths beyond the shared data types.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sudolyndon import Order, Puzzle

_RANK = {
    Order.ALT: {"a": 0, "b": 1},
    Order.BLT: {"b": 0, "a": 1},
}


def oracle_is_lyndon(word: str, order: Order = Order.ALT) -> bool:
    """Strictly smaller than every proper suffix, by tuple comparison."""
    rank = _RANK[order]
    t = tuple(rank[c] for c in word)
    return all(t < t[i:] for i in range(1, len(t)))


def oracle_line_ok(word: str) -> bool:
    return oracle_is_lyndon(word, Order.ALT) or oracle_is_lyndon(word, Order.BLT)


def oracle_is_unbordered(word: str) -> bool:
    n = len(word)
    return not any(word[:k] == word[n - k :] for k in range(1, n))


def oracle_is_primitive(word: str) -> bool:
    n = len(word)
    return not any(
        n % d == 0 and word == word[:d] * (n // d) for d in range(1, n)
    )


def oracle_completions(pw: str, order: Order = Order.ALT) -> list[str]:
    """All Lyndon completions by brute force over every hole assignment."""
    holes = [i for i, c in enumerate(pw) if c == "?"]
    out = []
    for letters in product("ab", repeat=len(holes)):
        chars = list(pw)
        for i, letter in zip(holes, letters):
            chars[i] = letter
        word = "".join(chars)
        if oracle_is_lyndon(word, order):
            out.append(word)
    rank = _RANK[order]
    out.sort(key=lambda w: tuple(rank[c] for c in w))
    return out


@lru_cache(maxsize=None)
def oracle_valid_grids(n: int, m: int) -> tuple[tuple[str, ...], ...]:
    """Every full n x m grid whose rows and columns are all Lyndon words."""
    assert n * m <= 16, "brute-force enumeration is for tiny boards"
    grids = []
    for bits in range(2 ** (n * m)):
        rows = tuple(
            "".join("ab"[(bits >> (i * m + j)) & 1] for j in range(m))
            for i in range(n)
        )
        if all(oracle_line_ok(r) for r in rows) and all(
            oracle_line_ok("".join(col)) for col in zip(*rows)
        ):
            grids.append(rows)
    return tuple(grids)


def oracle_solutions(puzzle: Puzzle, grids=None) -> list[tuple[str, ...]]:
    """Solutions of ``puzzle`` by filtering full valid grids against its constraints."""
    if grids is None:
        grids = oracle_valid_grids(puzzle.n, puzzle.m)
    out = []
    for g in grids:
        ok = all(
            ch in (".", "*") or g[i][j] == ch
            for i, row in enumerate(puzzle.cells)
            for j, ch in enumerate(row)
        )
        if not ok:
            continue
        if puzzle.row_acounts is not None and any(
            g[i].count("a") != c for i, c in enumerate(puzzle.row_acounts)
        ):
            continue
        if puzzle.col_acounts is not None and any(
            "".join(col).count("a") != c
            for col, c in zip(zip(*g), puzzle.col_acounts)
        ):
            continue
        if puzzle.box_dims is not None:
            r, c = puzzle.box_dims
            per_band = puzzle.m // c
            box_ok = True
            for k in range((puzzle.n // r) * per_band):
                bi, bj = divmod(k, per_band)
                word = "".join(
                    g[bi * r + di][bj * c : bj * c + c] for di in range(r)
                )
                if not oracle_line_ok(word):
                    box_ok = False
                    break
            if not box_ok:
                continue
        if puzzle.forbidden_factors:
            lines = list(g) + ["".join(col) for col in zip(*g)]
            if any(f in line for line in lines for f in puzzle.forbidden_factors):
                continue
        out.append(g)
    return out
