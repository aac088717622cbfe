"""Finite random variables and the expectation calculus built on them."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    LawKindError,
    NormalizationError,
    NumericOverflowError,
    ParameterDomainError,
)
from probkit.core.rational import RationalValue, Real, is_rational, to_fraction, weighted_sum
from probkit.distributions import DiscreteLaw, Law, factorial_moment2, mean, variance

if TYPE_CHECKING:
    from probkit.couples.joint import JointLaw


_MATRIX_NDIM = 2


class FiniteRv(BaseModel):
    """A random variable with finitely many values ``x_i`` taken with probabilities ``p_i``."""

    model_config = ConfigDict(frozen=True)

    values: tuple[RationalValue, ...]
    probs: tuple[RationalValue, ...]

    @model_validator(mode="after")
    def _validate_law(self) -> FiniteRv:
        if not self.values:
            message = "A finite random variable needs at least one value"
            raise ParameterDomainError(message)
        if len(self.values) != len(self.probs):
            message = f"{len(self.values)} values but {len(self.probs)} probabilities"
            raise DimensionMismatchError(message)
        if len(set(self.values)) != len(self.values):
            message = "Values must be pairwise distinct; use FiniteRv.from_pairs to merge duplicates"
            raise ParameterDomainError(message)
        if any(weight < 0 for weight in self.probs):
            message = "Probabilities must be nonnegative"
            raise ParameterDomainError(message)
        total = sum(self.probs, Fraction(0))
        if total != 1:
            message = f"Probabilities must add up to exactly 1, got {total}"
            raise NormalizationError(message)
        return self

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Real, Real]]) -> FiniteRv:
        """Build a variable from ``(value, probability)`` pairs, merging equal values."""
        merged: dict[Fraction, Fraction] = {}
        for value, weight in pairs:
            key = to_fraction(value)
            merged[key] = merged.get(key, Fraction(0)) + to_fraction(weight)
        ordered = sorted(merged.items())
        return cls(values=tuple(value for value, _ in ordered), probs=tuple(weight for _, weight in ordered))

    @classmethod
    def constant(cls, value: Real) -> FiniteRv:
        """Return the variable equal to *value* with probability one."""
        return cls(values=(to_fraction(value),), probs=(Fraction(1),))

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        """Return the ``(value, probability)`` pairs."""
        return list(zip(self.values, self.probs, strict=True))

    def mass_at(self, x: Real) -> Fraction:
        """Return ``P(X = x)``."""
        key = to_fraction(x)
        for value, weight in self.pairs():
            if value == key:
                return weight
        return Fraction(0)

    def map(self, fn: Callable[[Fraction], Real]) -> FiniteRv:
        """Return the law of ``fn(X)``."""
        return FiniteRv.from_pairs((fn(value), weight) for value, weight in self.pairs())


@dataclass(frozen=True)
class MomentSummary:
    """Mean, variance, standard deviation and second factorial moment."""

    mean: float
    variance: float
    std_dev: float
    factorial_moment2: float


def expectation(rv: FiniteRv) -> float:
    """Return ``E(X) = sum x_i p_i``, summed exactly before conversion."""
    return float(exact_expectation(rv))


def exact_expectation(rv: FiniteRv) -> Fraction:
    """Return ``E(X)`` as an exact rational."""
    return sum((value * weight for value, weight in rv.pairs()), Fraction(0))


def expectation_of_function(rv: FiniteRv, g: Callable[[Fraction], Real]) -> float:
    """Return ``E(g(X)) = sum g(x_i) p_i``; exact when *g* returns rationals."""
    return weighted_sum((g(value), weight) for value, weight in rv.pairs())


def exact_expectation_of_function(rv: FiniteRv, g: Callable[[Fraction], Real]) -> Fraction:
    """Return ``E(g(X))`` exactly; *g* must map rationals to rationals."""
    total = Fraction(0)
    for value, weight in rv.pairs():
        image = g(value)
        if not is_rational(image):
            message = f"g({value}) = {image!r} is not rational"
            raise DomainError(message)
        total += Fraction(image) * weight
    return total


def exact_variance(rv: FiniteRv) -> Fraction:
    """Return ``Var(X) = E((X - E X)^2)`` exactly."""
    centre = exact_expectation(rv)
    return sum(((value - centre) ** 2 * weight for value, weight in rv.pairs()), Fraction(0))


def variance_of(rv: FiniteRv) -> float:
    """Return ``Var(X)``."""
    return float(exact_variance(rv))


def exact_factorial_moment2(rv: FiniteRv) -> Fraction:
    """Return ``E(X(X - 1))`` exactly."""
    return exact_expectation_of_function(rv, lambda x: x * (x - 1))


def _pair_moments(pair: JointLaw) -> tuple[Fraction, Fraction, Fraction]:
    cells = list(pair.cells())
    mean_x = sum((x * weight for x, _, weight in cells), Fraction(0))
    mean_y = sum((y * weight for _, y, weight in cells), Fraction(0))
    mean_xy = sum((x * y * weight for x, y, weight in cells), Fraction(0))
    return mean_x, mean_y, mean_xy


def exact_covariance(pair: JointLaw) -> Fraction:
    """Return ``Cov(X, Y) = E(XY) - E(X) E(Y)`` exactly."""
    mean_x, mean_y, mean_xy = _pair_moments(pair)
    return mean_xy - mean_x * mean_y


def covariance(pair: JointLaw) -> float:
    """Return ``Cov(X, Y)``."""
    return float(exact_covariance(pair))


def correlation(pair: JointLaw) -> float:
    """Return the linear correlation coefficient of the pair."""
    variance_x = exact_variance(pair.marginal_x())
    variance_y = exact_variance(pair.marginal_y())
    if variance_x == 0 or variance_y == 0:
        message = "Correlation needs both marginal standard deviations to be positive"
        raise DomainError(message)
    rho = float(exact_covariance(pair)) / math.sqrt(float(variance_x) * float(variance_y))
    return max(-1.0, min(1.0, rho))


def variance_of_linear_combination(pairwise_covs: Sequence[Sequence[float]], coeffs: Sequence[float]) -> float:
    """Return ``Var(sum a_i X_i)`` from the covariance matrix of the ``X_i``."""
    matrix = np.asarray(pairwise_covs, dtype=float)
    weights = np.asarray(coeffs, dtype=float)
    if matrix.ndim != _MATRIX_NDIM or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] != weights.shape[0]:
        message = f"Covariance matrix of shape {matrix.shape} does not match {weights.shape[0]} coefficients"
        raise DimensionMismatchError(message)
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
        message = "Covariance matrix must be symmetric"
        raise DomainError(message)
    return float(weights @ matrix @ weights)


def markov_bound(mean_of_nonneg: float, lam: float) -> float:
    """Return the Markov bound ``1/lambda`` on ``P(Y > lambda E(Y))``, clipped to 1."""
    if mean_of_nonneg <= 0 or lam <= 0:
        message = f"Markov bound needs a positive mean and lambda, got {mean_of_nonneg} and {lam}"
        raise DomainError(message)
    return min(1.0, 1.0 / lam)


def tchebychev_interval(mean_value: float, sigma: float, alpha: float) -> tuple[float, float]:
    """Return ``[m - sigma/sqrt(alpha), m + sigma/sqrt(alpha)]``, covering at least ``1 - alpha``."""
    if not 0 < alpha < 1:
        message = f"alpha must lie in (0, 1), got {alpha}"
        raise DomainError(message)
    if sigma < 0:
        message = f"sigma must be nonnegative, got {sigma}"
        raise DomainError(message)
    half_width = sigma / math.sqrt(alpha)
    return mean_value - half_width, mean_value + half_width


def rvc(mean_value: float, sigma: float) -> float:
    """Return the relative variation coefficient ``|sigma / mean|``."""
    if mean_value == 0:
        message = "The relative variation coefficient needs a nonzero mean"
        raise DomainError(message)
    if sigma < 0:
        message = f"sigma must be nonnegative, got {sigma}"
        raise DomainError(message)
    return abs(sigma / mean_value)


def interval_probability(rv: FiniteRv, lo: Real, hi: Real) -> Fraction:
    """Return ``P(lo <= X <= hi)`` exactly."""
    low, high = to_fraction(lo), to_fraction(hi)
    return sum((weight for value, weight in rv.pairs() if low <= value <= high), Fraction(0))


def law_interval_probability(law: Law, lo: float, hi: float) -> Fraction:
    """Return ``P(lo <= X <= hi)`` exactly for a finite-support discrete law."""
    if not isinstance(law, DiscreteLaw):
        message = f"{law.law} is not a discrete law"
        raise LawKindError(message)
    return sum((mass for value, mass in law.exact_table() if lo <= value <= hi), Fraction(0))


def law_to_rv(law: Law) -> FiniteRv:
    """Return the finite random variable of a bounded discrete law with rational parameters."""
    if not isinstance(law, DiscreteLaw):
        message = f"{law.law} is not a discrete law"
        raise LawKindError(message)
    return FiniteRv.from_pairs(law.exact_table())


def cumulative_table(rv: FiniteRv) -> list[tuple[Fraction, Fraction]]:
    """Return the exact distribution table ``[(x, F(x))]`` in increasing ``x``."""
    running = Fraction(0)
    table: list[tuple[Fraction, Fraction]] = []
    for value, weight in sorted(rv.pairs()):
        running += weight
        table.append((value, running))
    return table


def rv_mgf(rv: FiniteRv, s: float) -> float:
    """Return ``E(exp(sX))``."""
    try:
        terms = [float(weight) * math.exp(s * float(value)) for value, weight in rv.pairs()]
    except OverflowError as error:
        message = f"Moment generating function overflows at s={s}"
        raise NumericOverflowError(message) from error
    total = math.fsum(terms)
    if not math.isfinite(total):
        message = f"Moment generating function overflows at s={s}"
        raise NumericOverflowError(message)
    return total


def summarize(rv: FiniteRv) -> MomentSummary:
    """Return the moment summary of a finite random variable."""
    var = exact_variance(rv)
    return MomentSummary(
        mean=expectation(rv),
        variance=float(var),
        std_dev=math.sqrt(float(var)),
        factorial_moment2=float(exact_factorial_moment2(rv)),
    )


def summarize_law(law: Law) -> MomentSummary:
    """Return the moment summary of a catalogued law from its closed forms."""
    var = variance(law)
    fm2 = factorial_moment2(law) if isinstance(law, DiscreteLaw) else math.nan
    return MomentSummary(mean=mean(law), variance=var, std_dev=math.sqrt(var), factorial_moment2=fm2)


__all__ = [
    "FiniteRv",
    "MomentSummary",
    "correlation",
    "covariance",
    "cumulative_table",
    "exact_covariance",
    "exact_expectation",
    "exact_expectation_of_function",
    "exact_factorial_moment2",
    "exact_variance",
    "expectation",
    "expectation_of_function",
    "interval_probability",
    "law_interval_probability",
    "law_to_rv",
    "markov_bound",
    "rvc",
    "rv_mgf",
    "summarize",
    "summarize_law",
    "tchebychev_interval",
    "variance_of",
    "variance_of_linear_combination",
]
