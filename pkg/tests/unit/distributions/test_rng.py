"""Tests for the deterministic generator."""

from __future__ import annotations

import pytest

from probkit.core.errors import DomainError
from probkit.distributions import Rng


def test_equal_seeds_give_equal_streams() -> None:
    """The stream is a pure function of the seed."""
    first, second = Rng(42), Rng(42)
    assert [first.next_u64() for _ in range(20)] == [second.next_u64() for _ in range(20)]
    assert Rng(42).random() == Rng(42).random()


def test_distinct_seeds_give_distinct_streams() -> None:
    """Neighbouring seeds are decorrelated by the seeding mix."""
    assert [Rng(1).next_u64() for _ in range(3)] != [Rng(2).next_u64() for _ in range(3)]
    assert Rng(0).state != 0


def test_outputs_fit_their_ranges() -> None:
    """Words are 64-bit, doubles lie in [0, 1) or (0, 1), integers below the bound."""
    rng = Rng(7)
    for _ in range(2000):
        assert 0 <= rng.next_u64() < 2**64
        assert 0.0 <= rng.random() < 1.0
        assert 0.0 < rng.uniform_open() < 1.0
        assert 0 <= rng.randbelow(6) < 6


def test_randbelow_covers_every_value() -> None:
    """Rejection sampling reaches every residue."""
    rng = Rng(3)
    assert {rng.randbelow(5) for _ in range(500)} == set(range(5))
    assert rng.randbelow(1) == 0


def test_invalid_arguments() -> None:
    """Seeds are nonnegative and bounds positive."""
    with pytest.raises(DomainError):
        Rng(-1)
    with pytest.raises(DomainError):
        Rng(1).randbelow(0)


def test_split_gives_an_independent_child() -> None:
    """A child stream differs from its parent's continuation and is reproducible."""
    parent = Rng(10)
    child = parent.split()
    assert [child.next_u64() for _ in range(5)] != [parent.next_u64() for _ in range(5)]
    assert Rng(10).split().next_u64() == Rng(10).split().next_u64()
