"""Deterministic cross-platform sampling for reproducible verification runs.

SplitMix64: the state advances by the golden-ratio increment
0x9E3779B97F4A7C15 and outputs pass through the two mixing rounds
(xor-shift 30, multiply 0xBF58476D1CE4E5B9; xor-shift 27, multiply
0x94D049BB133111EB; xor-shift 31).  Doubles take the top 53 bits, so every
platform with IEEE-754 doubles reproduces identical sample streams.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit splittable generator; seed fully determines the stream."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)

    def sign(self) -> float:
        return 1.0 if self.next_u64() & 1 else -1.0
