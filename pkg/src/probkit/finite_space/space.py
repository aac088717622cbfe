"""Finite probability spaces with exact rational weights."""

from __future__ import annotations

import json
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, cast

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    NormalizationError,
    ParameterDomainError,
    ParseError,
    ZeroProbabilityError,
)
from probkit.core.rational import RationalValue, Real
from probkit.moments.random_variable import FiniteRv


@dataclass(frozen=True)
class Event:
    """A subset of a space's outcomes, stored as indices into ``outcomes``."""

    indices: frozenset[int]
    universe: int

    def __post_init__(self) -> None:
        out_of_range = [index for index in self.indices if not 0 <= index < self.universe]
        if out_of_range:
            message = f"Event indices {sorted(out_of_range)} fall outside 0..{self.universe - 1}"
            raise DomainError(message)

    def _check_compatible(self, other: Event) -> None:
        if other.universe != self.universe:
            message = f"Events live on spaces of different sizes ({self.universe} and {other.universe})"
            raise DimensionMismatchError(message)

    def __and__(self, other: Event) -> Event:
        self._check_compatible(other)
        return Event(self.indices & other.indices, self.universe)

    def __or__(self, other: Event) -> Event:
        self._check_compatible(other)
        return Event(self.indices | other.indices, self.universe)

    def __sub__(self, other: Event) -> Event:
        self._check_compatible(other)
        return Event(self.indices - other.indices, self.universe)

    def __invert__(self) -> Event:
        return Event(frozenset(range(self.universe)) - self.indices, self.universe)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: object) -> bool:
        return index in self.indices

    def issubset(self, other: Event) -> bool:
        """Return whether every outcome of this event belongs to *other*."""
        self._check_compatible(other)
        return self.indices <= other.indices

    def isdisjoint(self, other: Event) -> bool:
        """Return whether the two events share no outcome."""
        self._check_compatible(other)
        return self.indices.isdisjoint(other.indices)


def _freeze_label(label: object) -> Hashable:
    if isinstance(label, list):
        return tuple(_freeze_label(item) for item in cast("list[object]", label))
    if not isinstance(label, Hashable):
        message = f"Outcome labels must be hashable, got {label!r}"
        raise ParameterDomainError(message)
    return label


def _label_to_json(label: object) -> object:
    if isinstance(label, tuple):
        return [_label_to_json(item) for item in cast("tuple[object, ...]", label)]
    return label


class FiniteProbabilitySpace(BaseModel):
    """Labeled outcomes carrying exact rational weights that add up to one."""

    model_config = ConfigDict(frozen=True)

    outcomes: tuple[Any, ...] = Field(min_length=1)
    weights: tuple[RationalValue, ...]

    @field_validator("outcomes", mode="before")
    @classmethod
    def _freeze_outcomes(cls, value: object) -> object:
        if isinstance(value, (list, tuple)):
            return tuple(_freeze_label(item) for item in cast("Sequence[object]", value))
        return value

    @model_validator(mode="after")
    def _validate_weights(self) -> FiniteProbabilitySpace:
        if len(self.outcomes) != len(self.weights):
            message = f"{len(self.outcomes)} outcomes but {len(self.weights)} weights"
            raise DimensionMismatchError(message)
        if len(set(self.outcomes)) != len(self.outcomes):
            message = "Outcome labels must be pairwise distinct"
            raise ParameterDomainError(message)
        negative = [index for index, weight in enumerate(self.weights) if weight < 0]
        if negative:
            message = f"Weights must be nonnegative; negative at indices {negative}"
            raise ParameterDomainError(message)
        total = sum(self.weights, Fraction(0))
        if total != 1:
            message = f"Weights must add up to exactly 1, got {total}"
            raise NormalizationError(message)
        return self

    @property
    def size(self) -> int:
        """Number of outcomes."""
        return len(self.outcomes)

    @property
    def omega(self) -> Event:
        """The sure event."""
        return Event(frozenset(range(self.size)), self.size)

    @property
    def empty(self) -> Event:
        """The impossible event."""
        return Event(frozenset(), self.size)

    def event(self, predicate: Callable[[Any], bool]) -> Event:
        """Return the event of the outcomes whose label satisfies *predicate*."""
        return Event(
            frozenset(index for index, label in enumerate(self.outcomes) if predicate(label)),
            self.size,
        )

    def event_of(self, labels: Iterable[object]) -> Event:
        """Return the event made of the given outcome labels."""
        return Event(frozenset(self.index_of(label) for label in labels), self.size)

    def index_of(self, label: object) -> int:
        """Return the position of *label* among the outcomes."""
        frozen = _freeze_label(label)
        try:
            return self.outcomes.index(frozen)
        except ValueError as error:
            message = f"Unknown outcome label {label!r}"
            raise DomainError(message) from error

    def check_event(self, event: Event) -> None:
        """Raise when *event* was not built for a space of this size."""
        if event.universe != self.size:
            message = f"Event built for {event.universe} outcomes used on a space of {self.size}"
            raise DimensionMismatchError(message)


def uniform_space(outcome_count: int, labels: Sequence[object] | None = None) -> FiniteProbabilitySpace:
    """Return the equiprobable space on *outcome_count* outcomes.

    Outcomes are labeled ``0..n-1`` unless *labels* is given.
    """
    if outcome_count < 1:
        message = f"An equiprobable space needs at least one outcome, got {outcome_count}"
        raise ZeroProbabilityError(message)
    if labels is None:
        labels = range(outcome_count)
    elif len(labels) != outcome_count:
        message = f"{len(labels)} labels given for {outcome_count} outcomes"
        raise DimensionMismatchError(message)
    weight = Fraction(1, outcome_count)
    return FiniteProbabilitySpace(outcomes=tuple(labels), weights=(weight,) * outcome_count)


def equiprobable_space(labels: Sequence[object]) -> FiniteProbabilitySpace:
    """Return the equiprobable space whose outcomes are *labels*."""
    return uniform_space(len(labels), labels)


def prob(space: FiniteProbabilitySpace, a: Event) -> Fraction:
    """Return ``P(A)`` as the exact sum of the weights of its outcomes."""
    space.check_event(a)
    return sum((space.weights[index] for index in a.indices), Fraction(0))


def conditional_prob(space: FiniteProbabilitySpace, b: Event, given_a: Event) -> Fraction:
    """Return ``P(B | A)``, which is ``0`` when ``P(A) = 0``."""
    denominator = prob(space, given_a)
    if denominator == 0:
        return Fraction(0)
    return prob(space, b & given_a) / denominator


def chain_rule(space: FiniteProbabilitySpace, events: Sequence[Event]) -> Fraction:
    """Return ``P(A1) P(A2|A1) ... P(An|A1...An-1)``."""
    if not events:
        message = "The chain rule needs at least one event"
        raise DomainError(message)
    result = prob(space, events[0])
    running = events[0]
    for event in events[1:]:
        result *= conditional_prob(space, event, running)
        running &= event
    return result


def product_space(first: FiniteProbabilitySpace, second: FiniteProbabilitySpace) -> FiniteProbabilitySpace:
    """Return the space of two independent experiments, labeled by pairs."""
    outcomes = tuple((left, right) for left in first.outcomes for right in second.outcomes)
    weights = tuple(left * right for left in first.weights for right in second.weights)
    return FiniteProbabilitySpace(outcomes=outcomes, weights=weights)


def push_forward(space: FiniteProbabilitySpace, fn: Callable[[Any], Real]) -> FiniteRv:
    """Return the law of the random variable ``fn`` defined on *space*."""
    return FiniteRv.from_pairs((fn(label), weight) for label, weight in zip(space.outcomes, space.weights, strict=True))


def space_to_json(space: FiniteProbabilitySpace) -> str:
    """Serialize *space* as ``{"outcomes": [...], "weights": ["num/den", ...]}``."""
    payload = space.model_dump(mode="json")
    payload["outcomes"] = [_label_to_json(label) for label in space.outcomes]
    return json.dumps(payload)


def space_from_json(text: str) -> FiniteProbabilitySpace:
    """Parse a space from its JSON form; decimal weights are converted exactly."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as error:
        message = f"Invalid space JSON: {error.msg}"
        raise ParseError(message, row=error.lineno, column=error.colno) from error
    return FiniteProbabilitySpace.model_validate(payload)


__all__ = [
    "Event",
    "FiniteProbabilitySpace",
    "chain_rule",
    "conditional_prob",
    "equiprobable_space",
    "product_space",
    "prob",
    "push_forward",
    "space_from_json",
    "space_to_json",
    "uniform_space",
]
