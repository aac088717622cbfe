"""Cause partitions, the total probability formula and Bayes posteriors."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    NormalizationError,
    ParameterDomainError,
    ZeroProbabilityError,
)
from probkit.core.rational import RationalValue

from .space import Event, FiniteProbabilitySpace, conditional_prob, prob


class CausePartition(BaseModel):
    """Prior probabilities ``P(E_i)`` of disjoint causes and likelihoods ``P(B | E_i)``."""

    model_config = ConfigDict(frozen=True)

    priors: tuple[RationalValue, ...]
    likelihoods: tuple[RationalValue, ...]

    @model_validator(mode="after")
    def _validate_partition(self) -> CausePartition:
        if not self.priors:
            message = "A cause partition needs at least one cause"
            raise ParameterDomainError(message)
        if len(self.priors) != len(self.likelihoods):
            message = f"{len(self.priors)} priors but {len(self.likelihoods)} likelihoods"
            raise DimensionMismatchError(message)
        if any(prior < 0 for prior in self.priors):
            message = "Prior probabilities must be nonnegative"
            raise ParameterDomainError(message)
        total = sum(self.priors, Fraction(0))
        if total != 1:
            message = f"Prior probabilities must add up to 1, got {total}"
            raise NormalizationError(message)
        if any(not 0 <= likelihood <= 1 for likelihood in self.likelihoods):
            message = "Likelihoods must lie in [0, 1]"
            raise ParameterDomainError(message)
        return self

    @classmethod
    def from_space(
        cls,
        space: FiniteProbabilitySpace,
        causes: Sequence[Event],
        effect: Event,
    ) -> CausePartition:
        """Build the partition that *causes* induce on *space* for the event *effect*."""
        for index, cause in enumerate(causes):
            for other in causes[index + 1 :]:
                if not cause.isdisjoint(other):
                    message = "Causes must be pairwise disjoint"
                    raise ParameterDomainError(message)
        return cls(
            priors=tuple(prob(space, cause) for cause in causes),
            likelihoods=tuple(conditional_prob(space, effect, cause) for cause in causes),
        )


def total_probability(partition: CausePartition) -> Fraction:
    """Return ``P(B) = sum_j P(B | E_j) P(E_j)``."""
    return sum(
        (prior * likelihood for prior, likelihood in zip(partition.priors, partition.likelihoods, strict=True)),
        Fraction(0),
    )


def bayes_posterior(partition: CausePartition, *, allow_null_causes: bool = False) -> tuple[Fraction, ...]:
    """Return the posteriors ``P(E_i | B)``.

    Causes with a zero prior are rejected unless *allow_null_causes* is set,
    in which case they receive a zero posterior.
    """
    if not allow_null_causes and any(prior <= 0 for prior in partition.priors):
        message = "Bayes posteriors need strictly positive priors"
        raise ParameterDomainError(message)
    evidence = total_probability(partition)
    if evidence == 0:
        message = "The observed event has zero total probability"
        raise ZeroProbabilityError(message)
    return tuple(
        prior * likelihood / evidence
        for prior, likelihood in zip(partition.priors, partition.likelihoods, strict=True)
    )


def posterior_odds(partition: CausePartition, first: int, second: int) -> Fraction:
    """Return ``P(E_first | B) / P(E_second | B)``."""
    posteriors = bayes_posterior(partition, allow_null_causes=True)
    if posteriors[second] == 0:
        message = f"Cause {second} has zero posterior probability"
        raise DomainError(message)
    return posteriors[first] / posteriors[second]


__all__ = [
    "CausePartition",
    "bayes_posterior",
    "posterior_odds",
    "total_probability",
]
