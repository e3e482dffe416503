"""Seeded, portable pseudo-random generator.

SplitMix64 (Steele, Lea, Flood's mix finalizer): each call advances the
state by the golden-gamma constant and scrambles it with two xor-shift
multiplies.  The algorithm is fully specified by the three constants
below, so any implementation in any language reproduces the stream for a
given 64-bit seed.  Bounded draws use rejection sampling on the top of
the range so they are exactly uniform and implementation independent.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """One SplitMix64 scramble of a 64-bit value (stateless)."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _MIX1) & MASK64
    x = ((x ^ (x >> 27)) * _MIX2) & MASK64
    return x ^ (x >> 31)


def fnv1a64(text: str) -> int:
    """FNV-1a hash of a label, for deriving per-task child seeds."""
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & MASK64
    return h


def child_seed(seed: int, label: str) -> int:
    """Stable sub-stream seed for (seed, label); labels never collide streams."""
    return mix64((seed & MASK64) ^ fnv1a64(label))


class SplitMix64:
    """Deterministic 64-bit generator with uniform bounded draws."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        return mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n); n >= 1."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        # reject draws from the final partial block so the result is unbiased
        limit = (MASK64 + 1) - ((MASK64 + 1) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randbelow(hi - lo + 1)

    def choice(self, seq):
        return seq[self.randbelow(len(seq))]

    def sample_range(self, n: int, k: int) -> list[int]:
        """k distinct integers from range(n), in draw order (Floyd's algorithm)."""
        if k > n:
            raise ValueError("sample larger than population")
        chosen: dict[int, None] = {}
        for j in range(n - k, n):
            t = self.randbelow(j + 1)
            if t in chosen:
                chosen[j] = None
            else:
                chosen[t] = None
        return list(chosen)

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]
