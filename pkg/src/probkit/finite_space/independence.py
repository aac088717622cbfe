"""Pairwise, mutual and global independence of events."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from operator import and_

from probkit.core.errors import DomainError

from .space import Event, FiniteProbabilitySpace, prob

MIN_EVENTS = 2


@dataclass(frozen=True)
class IndependenceReport:
    """Which independence notions a family of events satisfies."""

    pairwise: bool
    mutual: bool
    global_: bool


def _factorizes(space: FiniteProbabilitySpace, events: Sequence[Event]) -> bool:
    joint = prob(space, reduce(and_, events))
    product = Fraction(1)
    for event in events:
        product *= prob(space, event)
    return joint == product


def independence_report(space: FiniteProbabilitySpace, events: Sequence[Event]) -> IndependenceReport:
    """Classify *events* by exact comparison of intersection probabilities."""
    if len(events) < MIN_EVENTS:
        message = f"Independence needs at least {MIN_EVENTS} events, got {len(events)}"
        raise DomainError(message)
    for event in events:
        space.check_event(event)
    pairwise = all(_factorizes(space, pair) for pair in itertools.combinations(events, 2))
    global_ = _factorizes(space, events)
    mutual = pairwise and all(
        _factorizes(space, family)
        for size in range(3, len(events) + 1)
        for family in itertools.combinations(events, size)
    )
    return IndependenceReport(pairwise=pairwise, mutual=mutual, global_=global_)


__all__ = ["IndependenceReport", "independence_report"]
