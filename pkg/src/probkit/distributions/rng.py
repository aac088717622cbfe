"""Deterministic 64-bit pseudo-random generator (xorshift64* seeded through splitmix64)."""

from __future__ import annotations

from probkit.core.errors import DomainError

_MASK64 = 0xFFFF_FFFF_FFFF_FFFF
_SPLITMIX_GAMMA = 0x9E37_79B9_7F4A_7C15
_XORSHIFT_MULTIPLIER = 0x2545_F491_4F6C_DD1D
_DOUBLE_BITS = 53
_DOUBLE_SCALE = 1.0 / (1 << _DOUBLE_BITS)


def _splitmix64(state: int) -> tuple[int, int]:
    """Advance a splitmix64 *state* and return ``(new_state, output)``."""
    state = (state + _SPLITMIX_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB) & _MASK64
    return state, z ^ (z >> 31)


class Rng:
    """Seedable generator; equal seeds give equal streams on every platform.

    Instances are not thread-safe: concurrent samplers need their own
    generator, for example one obtained through :meth:`split`.
    """

    def __init__(self, seed: int) -> None:
        if seed < 0:
            message = f"Seed must be a nonnegative integer, got {seed}"
            raise DomainError(message)
        _, state = _splitmix64(seed & _MASK64)
        # xorshift64* must never hold the all-zero state.
        self._state = state or _SPLITMIX_GAMMA

    @property
    def state(self) -> int:
        """Current 64-bit state."""
        return self._state

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _XORSHIFT_MULTIPLIER) & _MASK64

    def random(self) -> float:
        """Return a double uniformly spread over ``[0, 1)``."""
        return (self.next_u64() >> (64 - _DOUBLE_BITS)) * _DOUBLE_SCALE

    def uniform_open(self) -> float:
        """Return a double uniformly spread over the open interval ``(0, 1)``."""
        return ((self.next_u64() >> (64 - _DOUBLE_BITS)) + 0.5) * _DOUBLE_SCALE

    def randbelow(self, bound: int) -> int:
        """Return an integer uniform on ``0..bound-1`` by rejection."""
        if not 1 <= bound <= _MASK64 + 1:
            message = f"bound must lie in 1..2**64, got {bound}"
            raise DomainError(message)
        bits = (bound - 1).bit_length()
        while True:
            candidate = self.next_u64() >> (64 - bits)
            if candidate < bound:
                return candidate

    def split(self) -> Rng:
        """Return an independent child generator derived from the next output."""
        return Rng(self.next_u64())


__all__ = ["Rng"]
