"""Seeded puzzle generation: random firings away from the all-zeros board.

A puzzle is produced by applying ``difficulty`` pseudo-random firings to the
zero configuration, so the result is always firing equivalent to zero and the
game is guaranteed solvable. Generation is deterministic in (seed,
difficulty) and must stay reproducible across releases, so the generator is
pinned to an explicitly implemented algorithm rather than a standard
library's unspecified one.

PRNG: SplitMix64 (Steele, Lea & Flood's 64-bit mix; the reference generator
of java.util.SplittableRandom). For the j-th move we draw one 64-bit output
``x`` and take ``node = x mod 5`` and ``kind = (x >> 32) mod 4`` with kinds
ordered (A, B, -A, -B).
"""

from __future__ import annotations

from dataclasses import dataclass

from .r10 import FiringMove, MoveKind, PentagonConfig, ZERO_CONFIG, apply_firing

PRNG_NAME = "splitmix64"

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_KIND_ORDER = (MoveKind.A, MoveKind.B, MoveKind.NEG_A, MoveKind.NEG_B)


class SplitMix64:
    """Tiny deterministic 64-bit generator; one multiply-xorshift pipeline."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class Puzzle:
    config: PentagonConfig
    seed: int
    difficulty: int
    moves_applied: int
    prng: str = PRNG_NAME


def puzzle_moves(seed: int, difficulty: int) -> list[FiringMove]:
    """The deterministic firing sequence behind a puzzle."""
    if difficulty < 1:
        raise ValueError("difficulty must be at least 1")
    gen = SplitMix64(seed)
    moves = []
    for _ in range(difficulty):
        x = gen.next_u64()
        moves.append(FiringMove(node=x % 5, kind=_KIND_ORDER[(x >> 32) % 4]))
    return moves


def generate_puzzle(seed: int, difficulty: int) -> Puzzle:
    """Scramble the zero configuration with ``difficulty`` seeded firings.

    The output configuration is a sum of firing deltas, hence always firing
    equivalent to the all-zeros configuration.
    """
    config = ZERO_CONFIG
    moves = puzzle_moves(seed, difficulty)
    for move in moves:
        config = apply_firing(config, move)
    return Puzzle(config=config, seed=seed, difficulty=difficulty,
                  moves_applied=len(moves))
