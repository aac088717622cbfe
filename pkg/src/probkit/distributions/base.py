"""Abstract law hierarchy shared by the discrete and continuous catalogs."""

from __future__ import annotations

import bisect
import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import ClassVar, Literal

from pydantic import BaseModel, ConfigDict

from probkit.core.errors import DomainError, LawKindError, NumericOverflowError

from .rng import Rng
from .special import expand_bracket, invert_cdf

logger = logging.getLogger(__name__)

MASS_HORIZON = 1e-18
"""Past the mean, an unbounded scan stops at the first mass below this level."""


class SupportKind(StrEnum):
    """Shape of a law's set of values."""

    FINITE_INTEGER_RANGE = "finite-integer-range"
    INTEGER_FROM = "integer-from"
    REAL_INTERVAL = "real-interval"
    POINT = "point"


@dataclass(frozen=True)
class SupportDescriptor:
    """The values set of a law; ``upper`` is ``None`` for unbounded integer supports."""

    kind: SupportKind
    lower: float
    upper: float | None

    def contains(self, x: float) -> bool:
        """Return whether *x* is a possible value."""
        if self.kind is SupportKind.POINT:
            return x == self.lower
        if self.kind is SupportKind.REAL_INTERVAL:
            upper = math.inf if self.upper is None else self.upper
            return self.lower <= x <= upper
        if x != int(x) or x < self.lower:
            return False
        return self.upper is None or x <= self.upper


def check_level(s: float) -> None:
    """Raise unless ``0 < s < 1``."""
    if not 0 < s < 1:
        message = f"Quantile level must lie in (0, 1), got {s}"
        raise DomainError(message)


def guarded_exp(exponent: float, what: str) -> float:
    """Return ``exp(exponent)``, turning overflow into a domain overflow error."""
    try:
        return math.exp(exponent)
    except OverflowError as error:
        message = f"{what} overflows the double range"
        raise NumericOverflowError(message) from error


def check_sample_count(count: int) -> None:
    """Raise unless at least one draw is requested."""
    if count < 1:
        message = f"Sample count must be positive, got {count}"
        raise DomainError(message)


class BaseLaw(BaseModel, ABC):
    """Immutable probability law with its parameters validated on construction."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ClassVar[Literal["discrete", "continuous"]]
    law: str

    @abstractmethod
    def support(self) -> SupportDescriptor:
        """Return the values set."""

    @abstractmethod
    def mean(self) -> float:
        """Return ``E(X)``."""

    @abstractmethod
    def variance(self) -> float:
        """Return ``Var(X)``."""

    @abstractmethod
    def cdf(self, x: float) -> float:
        """Return ``P(X <= x)``."""

    @abstractmethod
    def quantile(self, s: float) -> float:
        """Return ``inf{x : F(x) >= s}``."""

    @abstractmethod
    def mgf(self, s: float) -> float:
        """Return ``E(exp(sX))``."""

    @abstractmethod
    def sample(self, rng: Rng, count: int) -> list[float]:
        """Draw *count* independent values."""

    def sf(self, x: float) -> float:
        """Return ``P(X > x)``."""
        return 1.0 - self.cdf(x)

    def mgf_upper_bound(self) -> float:
        """Return the supremum of the convergence region of the MGF (exclusive)."""
        return math.inf

    def check_mgf_domain(self, s: float) -> None:
        """Raise when *s* lies outside the open convergence region."""
        bound = self.mgf_upper_bound()
        if s >= bound:
            message = f"{self.law} moment generating function needs s < {bound:.12g}, got {s}"
            raise DomainError(message)


class DiscreteLaw(BaseLaw):
    """Integer-valued law evaluated through its mass function."""

    kind: ClassVar[Literal["discrete", "continuous"]] = "discrete"

    @abstractmethod
    def log_mass(self, k: int) -> float:
        """Return ``ln P(X = k)``, ``-inf`` outside the support."""

    @abstractmethod
    def exact_mass(self, k: int) -> Fraction:
        """Return ``P(X = k)`` as an exact rational."""

    @abstractmethod
    def factorial_moment2(self) -> float:
        """Return ``E(X(X - 1))``."""

    def mass(self, k: int) -> float:
        """Return ``P(X = k)``; zero off the support."""
        if not self.support().contains(k):
            return 0.0
        return math.exp(self.log_mass(k))

    def _cumulative(self) -> Iterator[tuple[float, float]]:
        """Yield ``(k, F(k))`` along the support, ending with ``F = 1``."""
        bounds = self.support()
        k = int(bounds.lower)
        centre = self.mean()
        running = 0.0
        compensation = 0.0
        while True:
            term = self.mass(k)
            # Neumaier summation keeps long unbounded scans accurate.
            total = running + term
            if abs(running) >= abs(term):
                compensation += (running - total) + term
            else:
                compensation += (term - total) + running
            running = total
            partial = min(1.0, running + compensation)
            if bounds.upper is not None and k >= bounds.upper:
                yield k, partial
                return
            if bounds.upper is None and k > centre and term <= MASS_HORIZON:
                logger.debug("Cumulative scan reached its horizon", extra={"law": self.law, "k": k})
                yield k, 1.0
                return
            yield k, partial
            k += 1

    def cdf(self, x: float) -> float:
        """Return ``P(X <= x)`` by summing masses up to ``floor(x)``."""
        if math.isnan(x):
            message = "cdf is undefined at NaN"
            raise DomainError(message)
        bounds = self.support()
        if x < bounds.lower:
            return 0.0
        if bounds.upper is not None and x >= bounds.upper:
            return 1.0
        if math.isinf(x):
            return 1.0
        target = math.floor(x)
        for k, cumulative in self._cumulative():
            if k >= target:
                return cumulative
        return 1.0

    def sf(self, x: float) -> float:
        """Return ``P(X > x)`` by summing the masses above ``floor(x)``."""
        bounds = self.support()
        if x < bounds.lower:
            return 1.0
        if (bounds.upper is not None and x >= bounds.upper) or math.isinf(x):
            return 0.0
        k = math.floor(x) + 1
        centre = self.mean()
        terms: list[float] = []
        while bounds.upper is None or k <= bounds.upper:
            term = self.mass(k)
            terms.append(term)
            if bounds.upper is None and k > centre and term <= MASS_HORIZON * MASS_HORIZON:
                break
            k += 1
        return min(1.0, math.fsum(terms))

    def quantile(self, s: float) -> float:
        """Return the smallest support point whose cumulative probability reaches *s*."""
        check_level(s)
        last = int(self.support().lower)
        for k, cumulative in self._cumulative():
            last = k
            if cumulative >= s:
                return k
        return last

    def cumulative_table(self) -> tuple[list[float], list[float]]:
        """Return the support points and cumulative probabilities of the scan."""
        points: list[float] = []
        levels: list[float] = []
        for k, cumulative in self._cumulative():
            points.append(k)
            levels.append(cumulative)
        return points, levels

    def exact_table(self) -> list[tuple[Fraction, Fraction]]:
        """Return ``(x, P(X = x))`` for every point of a bounded support, exactly."""
        bounds = self.support()
        if bounds.upper is None:
            message = f"{self.law} has unbounded support"
            raise DomainError(message)
        return [(Fraction(k), self.exact_mass(k)) for k in range(int(bounds.lower), int(bounds.upper) + 1)]

    def sample(self, rng: Rng, count: int) -> list[float]:
        """Draw by locating uniform levels in the cumulative table."""
        check_sample_count(count)
        points, levels = self.cumulative_table()
        last = len(points) - 1
        return [float(points[min(bisect.bisect_left(levels, rng.uniform_open()), last)]) for _ in range(count)]

    def mgf_by_summation(self, s: float) -> float:
        """Return ``sum_k P(X = k) exp(sk)`` over a bounded support."""
        bounds = self.support()
        if bounds.upper is None:
            message = f"{self.law} has unbounded support"
            raise DomainError(message)
        terms = [
            guarded_exp(self.log_mass(k) + s * k, f"{self.law} moment generating function")
            for k in range(int(bounds.lower), int(bounds.upper) + 1)
        ]
        return math.fsum(terms)


class ContinuousLaw(BaseLaw):
    """Absolutely continuous law evaluated through its density."""

    kind: ClassVar[Literal["discrete", "continuous"]] = "continuous"

    @abstractmethod
    def density(self, x: float) -> float:
        """Return the probability density at *x*."""

    def quantile(self, s: float) -> float:
        """Invert the distribution function numerically."""
        check_level(s)
        bounds = self.support()
        centre = self.mean()
        spread = math.sqrt(self.variance())
        lower = max(bounds.lower, centre - spread)
        upper = centre + spread
        lower, upper = expand_bracket(self.cdf, s, lower, upper, floor=bounds.lower)
        return invert_cdf(self.cdf, self.density, s, lower, upper)

    def sample(self, rng: Rng, count: int) -> list[float]:
        """Draw by inverse transform of open uniforms."""
        check_sample_count(count)
        return [self.quantile(rng.uniform_open()) for _ in range(count)]


def require_discrete(law: BaseLaw) -> DiscreteLaw:
    """Return *law* as a discrete law or raise :class:`LawKindError`."""
    if not isinstance(law, DiscreteLaw):
        message = f"{law.law} is a continuous law; the operation needs a discrete one"
        raise LawKindError(message)
    return law


def require_continuous(law: BaseLaw) -> ContinuousLaw:
    """Return *law* as a continuous law or raise :class:`LawKindError`."""
    if not isinstance(law, ContinuousLaw):
        message = f"{law.law} is a discrete law; the operation needs a continuous one"
        raise LawKindError(message)
    return law


__all__ = [
    "MASS_HORIZON",
    "BaseLaw",
    "ContinuousLaw",
    "DiscreteLaw",
    "SupportDescriptor",
    "SupportKind",
    "check_level",
    "check_sample_count",
    "guarded_exp",
    "require_continuous",
    "require_discrete",
]
