"""Seeded, portable pseudo-random numbers.

All randomized constructions in the toolkit draw from xorshift64*
(Vigna's xorshift64-star: three shift-xors followed by a multiply by
0x2545F4914F6CDD1D), so the same seed yields the same stream on every
platform and Python build.  A zero seed is remapped to a fixed nonzero
constant because the all-zero state is a fixed point of xorshift.
"""

MASK64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_ZERO_SEED = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int):
        self._state = (seed & MASK64) or _ZERO_SEED

    def next_u64(self) -> int:
        s = self._state
        s ^= (s >> 12)
        s ^= (s << 25) & MASK64
        s ^= (s >> 27)
        self._state = s
        return (s * _MULT) & MASK64

    def coin(self) -> bool:
        """One fair bit (the top bit of the next word)."""
        return bool(self.next_u64() >> 63)

    def below(self, k: int) -> int:
        """Uniform integer in [0, k) by rejection sampling."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (MASK64 + 1) - ((MASK64 + 1) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
