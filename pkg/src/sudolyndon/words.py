"""Binary-alphabet word primitives.

Words are plain Python strings over the two letters ``a`` and ``b``.  Both
total orders on the alphabet are supported: ``a < b`` and ``b < a``.  A word
is a Lyndon word under an order when it is strictly smaller, lexicographically,
than every proper suffix of itself.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator

from .errors import LimitError, WordError

A = "a"
B = "b"
ALPHABET = frozenset((A, B))

#: Default cap for exact-length enumeration; the number of Lyndon words of
#: length n grows like 2**n / n, so desk-scale work should stay below this.
DEFAULT_ENUMERATION_BOUND = 20

#: Return values of :func:`lex_compare`.
LESS, EQUAL, GREATER = -1, 0, 1

_SWAP = str.maketrans("ab", "ba")


class Order(enum.Enum):
    """One of the two strict total orders on the alphabet {a, b}."""

    ALT = "alt"  # a < b
    BLT = "blt"  # b < a

    @property
    def smallest(self) -> str:
        return A if self is Order.ALT else B

    @property
    def largest(self) -> str:
        return B if self is Order.ALT else A

    @property
    def opposite(self) -> "Order":
        return Order.BLT if self is Order.ALT else Order.ALT

    @property
    def letters(self) -> tuple[str, str]:
        """The alphabet, ascending under this order."""
        return (self.smallest, self.largest)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Order.{self.name}"


def swap_letters(word: str) -> str:
    """Exchange every ``a`` for a ``b`` and every ``b`` for an ``a``."""
    return word.translate(_SWAP)


def parse_word(text: str) -> str:
    """Validate ``text`` as a word: nonempty ASCII over {a, b}.

    Returns the word unchanged; raises :class:`WordError` otherwise.
    """
    if not isinstance(text, str):
        raise WordError(f"expected a string, got {type(text).__name__}")
    if not text:
        raise WordError("words must be nonempty")
    bad = set(text) - ALPHABET
    if bad:
        raise WordError(f"illegal letters {sorted(bad)!r}; words use only 'a' and 'b'")
    return text


def lex_compare(u: str, v: str, order: Order = Order.ALT) -> int:
    """Three-way lexicographic comparison of two words under ``order``.

    Returns :data:`LESS`, :data:`EQUAL` or :data:`GREATER`.  A proper prefix
    compares less than any of its extensions.
    """
    parse_word(u)
    parse_word(v)
    if order is Order.BLT:
        u = swap_letters(u)
        v = swap_letters(v)
    return (u > v) - (u < v)


def _duval_is_lyndon(s: str) -> bool:
    """Linear-time Lyndon test under the natural order of the symbols.

    Runs the first round of Duval's factorization; ``s`` is Lyndon exactly
    when its first factor is the whole string.
    """
    n = len(s)
    if n == 1:
        return True
    k = 0
    for j in range(1, n):
        cj = s[j]
        ck = s[k]
        if ck == cj:
            k += 1
        elif ck < cj:
            k = 0
        else:
            return False
    return k == 0


def is_lyndon(word: str, order: Order = Order.ALT) -> bool:
    """True when ``word`` is strictly smaller than all its proper suffixes under ``order``.

    Linear in ``len(word)``.
    """
    parse_word(word)
    if order is Order.BLT:
        word = swap_letters(word)
    # Words of the shape a..ab..b are always Lyndon; this covers the common
    # block patterns cheaply with C-level scans.
    if word[0] == A:
        split = word.find(B)
        if split > 0 and A not in word[split:]:
            return True
    return _duval_is_lyndon(word)


def is_lyndon_quadratic(word: str, order: Order = Order.ALT) -> bool:
    """Definition-based reference implementation of :func:`is_lyndon`.

    Compares the word against each proper suffix; kept as the oracle the fast
    test is validated against.
    """
    parse_word(word)
    return all(lex_compare(word, word[i:], order) == LESS for i in range(1, len(word)))


def is_lyndon_general(word: str) -> bool:
    """Lyndon test for words over arbitrary symbols under their natural order.

    Examples: ``cocoon`` and ``acacias`` qualify, ``bananas`` and ``eighteen``
    do not.
    """
    if not isinstance(word, str) or not word:
        raise WordError("words must be nonempty strings")
    return _duval_is_lyndon(word)


def is_unbordered(word: str) -> bool:
    """True when no word other than ``word`` itself is both a proper prefix and a proper suffix."""
    parse_word(word)
    n = len(word)
    # Longest proper border via the KMP failure function.
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    return fail[-1] == 0


def is_primitive(word: str) -> bool:
    """True when ``word`` is not a repetition u*k of a shorter word u."""
    parse_word(word)
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return False
    return True


def _lyndon_digit_words(n: int) -> Iterator[list[int]]:
    """All Lyndon words of length <= n over digits {0 < 1}, in lexicographic order.

    Fredricksen-Kessler-Maiorana successor generation: extend the current word
    periodically to length n, strip trailing maximal digits, increment.
    Amortized linear work per word.
    """
    w = [0]
    while True:
        yield w
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == 1:
            w.pop()
        if not w:
            return
        w[-1] += 1


def enumerate_lyndon(
    n: int, order: Order = Order.ALT, *, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[str]:
    """All Lyndon words of length exactly ``n`` under ``order``, lexicographically sorted under ``order``.

    Raises :class:`LimitError` when ``n`` exceeds ``bound`` (there are about
    2**n / n such words; the bound keeps enumeration desk-scale and explicit).
    """
    if n < 1:
        raise ValueError("word length must be positive")
    if n > bound:
        raise LimitError(f"enumeration length {n} exceeds the bound {bound}")
    letters = order.letters
    out = []
    for digits in _lyndon_digit_words(n):
        if len(digits) == n:
            out.append("".join(letters[d] for d in digits))
    return out


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def count_lyndon(n: int) -> int:
    """Number of binary Lyndon words of length ``n`` under one fixed order.

    Witt's necklace-counting formula: (1/n) * sum over d | n of mu(d) * 2**(n/d).
    """
    if n < 1:
        raise ValueError("word length must be positive")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * 2 ** (n // d)
    return total // n
