"""Seeded pseudo-randomness with a pinned, documented algorithm.

Generated fixtures must be reproducible from a seed alone, so the generator
algorithm is part of the file-format contract rather than whatever the host
language ships.  This is splitmix64 (Steele, Lea & Flood's SplittableRandom
finalizer), with rejection-sampled bounded draws and a Fisher-Yates shuffle.
"""

from __future__ import annotations

from typing import MutableSequence

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; identical streams for identical seeds."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform draw from [0, n); unbiased via rejection of the top residue."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def shuffle(self, items: MutableSequence) -> None:
        """In-place Fisher-Yates, drawing indices high-to-low."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
