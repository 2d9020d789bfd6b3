"""Seeded 64-bit linear congruential generator.

state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64);
each draw advances once and returns the high 31 bits (state >> 33).  The
recurrence is simple enough to reimplement in any language, so sampled
tuples can be reproduced outside Python.
"""

from __future__ import annotations

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class LCG:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK
        return self.state

    def next_u31(self) -> int:
        return self.next_u64() >> 33

    def below(self, bound: int) -> int:
        """Draw in [0, bound) by rejection, so every value is equally likely."""
        if not 0 < bound <= 1 << 31:
            raise ValueError("bound must lie in [1, 2^31]")
        limit = (1 << 31) - (1 << 31) % bound
        while True:
            v = self.next_u31()
            if v < limit:
                return v % bound

    def sample(self, population, k: int) -> list:
        """k distinct items in draw order (partial Fisher-Yates)."""
        pool = list(population)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
