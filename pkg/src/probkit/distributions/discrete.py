"""Discrete laws: degenerate, uniform, Bernoulli, binomial, hypergeometric, geometric family, Poisson."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import TYPE_CHECKING, Any, ClassVar, Literal, cast

from pydantic import AliasChoices, Field, model_validator

from probkit.core.errors import LawKindError, ParameterDomainError
from probkit.core.rational import RationalValue
from probkit.combinatorics import combinations, log_combinations, log_factorial

from .base import DiscreteLaw, SupportDescriptor, SupportKind, check_level, check_sample_count, guarded_exp
from .rng import Rng

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

EXACT_MASS_LIMIT = 60
"""Above this size parameter masses are evaluated in log space."""


def _prob_field() -> Any:
    return Field(validation_alias=AliasChoices("prob", "p"), serialization_alias="prob")


def _check_open_probability(law: str, p: Fraction) -> None:
    if not 0 < p < 1:
        message = f"{law} needs a probability strictly between 0 and 1, got {p}"
        raise ParameterDomainError(message)


def _check_positive(law: str, name: str, value: float) -> None:
    if not value > 0:
        message = f"{law} needs {name} > 0, got {value}"
        raise ParameterDomainError(message)


class Degenerate(DiscreteLaw):
    """Point mass at ``c``."""

    law: Literal["degen"] = "degen"
    c: RationalValue

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.POINT, float(self.c), float(self.c))

    def log_mass(self, k: int) -> float:
        return 0.0 if k == self.c else -math.inf

    def exact_mass(self, k: int) -> Fraction:
        return Fraction(1 if k == self.c else 0)

    def mean(self) -> float:
        return float(self.c)

    def variance(self) -> float:
        return 0.0

    def factorial_moment2(self) -> float:
        return float(self.c * (self.c - 1))

    def cdf(self, x: float) -> float:
        return 1.0 if x >= self.c else 0.0

    def sf(self, x: float) -> float:
        return 0.0 if x >= self.c else 1.0

    def quantile(self, s: float) -> float:
        check_level(s)
        return float(self.c)

    def sample(self, rng: Rng, count: int) -> list[float]:
        del rng
        check_sample_count(count)
        return [float(self.c)] * count

    def mgf(self, s: float) -> float:
        return guarded_exp(float(self.c) * s, "degen moment generating function")

    def _cumulative(self) -> Iterator[tuple[float, float]]:
        yield float(self.c), 1.0

    def exact_table(self) -> list[tuple[Fraction, Fraction]]:
        return [(self.c, Fraction(1))]


class DiscreteUniform(DiscreteLaw):
    """Equiprobable law on ``1..n``."""

    law: Literal["dunif"] = "dunif"
    n: int

    @model_validator(mode="after")
    def _validate_parameters(self) -> DiscreteUniform:
        _check_positive("dunif", "n", self.n)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.FINITE_INTEGER_RANGE, 1, self.n)

    def log_mass(self, k: int) -> float:
        return -math.log(self.n) if 1 <= k <= self.n else -math.inf

    def exact_mass(self, k: int) -> Fraction:
        return Fraction(1, self.n) if 1 <= k <= self.n else Fraction(0)

    def mass(self, k: int) -> float:
        return 1.0 / self.n if 1 <= k <= self.n else 0.0

    def mean(self) -> float:
        return (self.n + 1) / 2

    def variance(self) -> float:
        return (self.n * self.n - 1) / 12

    def factorial_moment2(self) -> float:
        return (self.n * self.n - 1) / 3

    def mgf(self, s: float) -> float:
        if s == 0:
            return 1.0
        try:
            return math.exp(s) * math.expm1(self.n * s) / (self.n * math.expm1(s))
        except OverflowError:
            return guarded_exp(math.inf, "dunif moment generating function")


class Bernoulli(DiscreteLaw):
    """Success indicator of a single trial with probability ``p``."""

    law: Literal["bern"] = "bern"
    p: RationalValue = _prob_field()

    @model_validator(mode="after")
    def _validate_parameters(self) -> Bernoulli:
        _check_open_probability("bern", self.p)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.FINITE_INTEGER_RANGE, 0, 1)

    def exact_mass(self, k: int) -> Fraction:
        if k == 1:
            return self.p
        return 1 - self.p if k == 0 else Fraction(0)

    def log_mass(self, k: int) -> float:
        mass = self.exact_mass(k)
        return math.log(mass) if mass > 0 else -math.inf

    def mass(self, k: int) -> float:
        return float(self.exact_mass(k))

    def mean(self) -> float:
        return float(self.p)

    def variance(self) -> float:
        return float(self.p * (1 - self.p))

    def factorial_moment2(self) -> float:
        return 0.0

    def mgf(self, s: float) -> float:
        p = float(self.p)
        return (1.0 - p) + p * guarded_exp(s, "bern moment generating function")


class Binomial(DiscreteLaw):
    """Number of successes in ``n`` independent trials with probability ``p``."""

    law: Literal["binom"] = "binom"
    n: int = Field(validation_alias=AliasChoices("size", "n"), serialization_alias="size")
    p: RationalValue = _prob_field()

    @model_validator(mode="after")
    def _validate_parameters(self) -> Binomial:
        _check_positive("binom", "size", self.n)
        _check_open_probability("binom", self.p)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.FINITE_INTEGER_RANGE, 0, self.n)

    def exact_mass(self, k: int) -> Fraction:
        if not 0 <= k <= self.n:
            return Fraction(0)
        return combinations(self.n, k) * self.p**k * (1 - self.p) ** (self.n - k)

    def log_mass(self, k: int) -> float:
        if not 0 <= k <= self.n:
            return -math.inf
        p = float(self.p)
        # One exactly rounded sum keeps masses at k and n - k identical when p = 1/2.
        return math.fsum(
            (
                log_factorial(self.n),
                -log_factorial(k),
                -log_factorial(self.n - k),
                k * math.log(p),
                (self.n - k) * math.log1p(-p),
            ),
        )

    def mass(self, k: int) -> float:
        if not 0 <= k <= self.n:
            return 0.0
        if self.n <= EXACT_MASS_LIMIT:
            return float(self.exact_mass(k))
        return math.exp(self.log_mass(k))

    def mean(self) -> float:
        return self.n * float(self.p)

    def variance(self) -> float:
        return float(self.n * self.p * (1 - self.p))

    def factorial_moment2(self) -> float:
        return float(self.n * (self.n - 1) * self.p**2)

    def mgf(self, s: float) -> float:
        p = float(self.p)
        base = (1.0 - p) + p * guarded_exp(s, "binom moment generating function")
        return guarded_exp(self.n * math.log(base), "binom moment generating function")


class Hypergeometric(DiscreteLaw):
    """Marked balls among ``r`` draws without replacement from ``N`` balls, ``M`` marked.

    The payload uses ``m`` (marked), ``n`` (unmarked) and ``k`` (draws);
    ``N``, ``M`` and ``r`` are accepted as well.
    """

    law: Literal["hyper"] = "hyper"
    marked: int = Field(validation_alias=AliasChoices("m", "marked"), serialization_alias="m")
    unmarked: int = Field(validation_alias=AliasChoices("n", "unmarked"), serialization_alias="n")
    draws: int = Field(validation_alias=AliasChoices("k", "draws"), serialization_alias="k")

    @model_validator(mode="before")
    @classmethod
    def _accept_urn_parameters(cls, data: object) -> object:
        if isinstance(data, dict) and {"N", "M", "r"} <= data.keys():
            values = cast("dict[str, Any]", data)
            total, marked, draws = values["N"], values["M"], values["r"]
            rest = {key: value for key, value in values.items() if key not in {"N", "M", "r"}}
            return {**rest, "m": marked, "n": total - marked, "k": draws}
        return data

    @model_validator(mode="after")
    def _validate_parameters(self) -> Hypergeometric:
        if self.marked < 0 or self.unmarked < 0:
            message = f"hyper needs nonnegative ball counts, got m={self.marked}, n={self.unmarked}"
            raise ParameterDomainError(message)
        _check_positive("hyper", "N", self.N)
        _check_positive("hyper", "r", self.r)
        if self.r > self.N:
            message = f"hyper cannot draw r={self.r} balls out of N={self.N}"
            raise ParameterDomainError(message)
        return self

    @property
    def N(self) -> int:
        """Total number of balls."""
        return self.marked + self.unmarked

    @property
    def M(self) -> int:
        """Number of marked balls."""
        return self.marked

    @property
    def r(self) -> int:
        """Number of draws."""
        return self.draws

    @property
    def theta(self) -> Fraction:
        """Proportion of marked balls."""
        return Fraction(self.M, self.N)

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(
            SupportKind.FINITE_INTEGER_RANGE,
            max(0, self.r - self.unmarked),
            min(self.r, self.M),
        )

    def exact_mass(self, k: int) -> Fraction:
        if not self.support().contains(k):
            return Fraction(0)
        return Fraction(combinations(self.M, k) * combinations(self.unmarked, self.r - k), combinations(self.N, self.r))

    def log_mass(self, k: int) -> float:
        if not self.support().contains(k):
            return -math.inf
        return (
            log_combinations(self.M, k)
            + log_combinations(self.unmarked, self.r - k)
            - log_combinations(self.N, self.r)
        )

    def mass(self, k: int) -> float:
        if not self.support().contains(k):
            return 0.0
        if self.N <= EXACT_MASS_LIMIT:
            return float(self.exact_mass(k))
        return math.exp(self.log_mass(k))

    def mean(self) -> float:
        return float(self.r * self.theta)

    def variance(self) -> float:
        if self.N == 1:
            return 0.0
        return float(self.r * self.theta * (1 - self.theta) * Fraction(self.N - self.r, self.N - 1))

    def factorial_moment2(self) -> float:
        if self.N == 1:
            return 0.0
        return float(Fraction(self.M * (self.M - 1) * self.r * (self.r - 1), self.N * (self.N - 1)))

    def mgf(self, s: float) -> float:
        return self.mgf_by_summation(s)


class _GeometricFamily(DiscreteLaw):
    """Shared closed forms of the laws ``1 - F(k) = q^(k - lower + 1)``."""

    first_value: ClassVar[int]
    p: RationalValue = _prob_field()

    @model_validator(mode="after")
    def _validate_parameters(self) -> _GeometricFamily:
        _check_open_probability(self.law, self.p)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.INTEGER_FROM, self.first_value, None)

    def exact_mass(self, k: int) -> Fraction:
        first = self.first_value
        if k < first:
            return Fraction(0)
        return self.p * (1 - self.p) ** (k - first)

    def log_mass(self, k: int) -> float:
        first = self.first_value
        if k < first:
            return -math.inf
        p = float(self.p)
        return math.log(p) + (k - first) * math.log1p(-p)

    def mass(self, k: int) -> float:
        if k < self.first_value:
            return 0.0
        return math.exp(self.log_mass(k))

    def _tail(self, count: int) -> float:
        """Return ``q^count``."""
        return math.exp(count * math.log1p(-float(self.p)))

    def cdf(self, x: float) -> float:
        first = self.first_value
        if x < first:
            return 0.0
        if math.isinf(x):
            return 1.0
        return -math.expm1((math.floor(x) - first + 1) * math.log1p(-float(self.p)))

    def sf(self, x: float) -> float:
        first = self.first_value
        if x < first:
            return 1.0
        if math.isinf(x):
            return 0.0
        return self._tail(math.floor(x) - first + 1)

    def quantile(self, s: float) -> float:
        check_level(s)
        first = self.first_value
        k = first - 1 + max(1, math.ceil(math.log1p(-s) / math.log1p(-float(self.p))))
        while k > first and self.cdf(k - 1) >= s:
            k -= 1
        while self.cdf(k) < s:
            k += 1
        return k

    def sample(self, rng: Rng, count: int) -> list[float]:
        check_sample_count(count)
        return [float(self.quantile(rng.uniform_open())) for _ in range(count)]

    def mgf_upper_bound(self) -> float:
        return -math.log1p(-float(self.p))


class Geometric(_GeometricFamily):
    """Rank of the first success in independent trials, values ``1, 2, ...``."""

    law: Literal["geom"] = "geom"

    first_value: ClassVar[int] = 1

    def mean(self) -> float:
        return float(1 / self.p)

    def variance(self) -> float:
        return float((1 - self.p) / self.p**2)

    def factorial_moment2(self) -> float:
        return float(2 * (1 - self.p) / self.p**2)

    def mgf(self, s: float) -> float:
        self.check_mgf_domain(s)
        p = float(self.p)
        growth = math.exp(s)
        return p * growth / (1.0 - (1.0 - p) * growth)


class NumFailures(_GeometricFamily):
    """Number of failures before the first success, values ``0, 1, ...``."""

    law: Literal["nfail"] = "nfail"

    first_value: ClassVar[int] = 0

    def mean(self) -> float:
        return float((1 - self.p) / self.p)

    def variance(self) -> float:
        return float((1 - self.p) / self.p**2)

    def factorial_moment2(self) -> float:
        return float(2 * (1 - self.p) ** 2 / self.p**2)

    def mgf(self, s: float) -> float:
        self.check_mgf_domain(s)
        p = float(self.p)
        return p / (1.0 - (1.0 - p) * math.exp(s))


class NegativeBinomial(DiscreteLaw):
    """Rank of the ``k``-th success in independent trials, values ``k, k + 1, ...``."""

    law: Literal["nbinom"] = "nbinom"
    k: int = Field(validation_alias=AliasChoices("size", "k"), serialization_alias="size")
    p: RationalValue = _prob_field()

    @model_validator(mode="after")
    def _validate_parameters(self) -> NegativeBinomial:
        _check_positive("nbinom", "size", self.k)
        _check_open_probability("nbinom", self.p)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.INTEGER_FROM, self.k, None)

    def exact_mass(self, k: int) -> Fraction:
        if k < self.k:
            return Fraction(0)
        return combinations(k - 1, self.k - 1) * self.p**self.k * (1 - self.p) ** (k - self.k)

    def log_mass(self, k: int) -> float:
        if k < self.k:
            return -math.inf
        p = float(self.p)
        return log_combinations(k - 1, self.k - 1) + self.k * math.log(p) + (k - self.k) * math.log1p(-p)

    def mass(self, k: int) -> float:
        if k < self.k:
            return 0.0
        if k <= EXACT_MASS_LIMIT:
            return float(self.exact_mass(k))
        return math.exp(self.log_mass(k))

    def mean(self) -> float:
        return float(self.k / self.p)

    def variance(self) -> float:
        return float(self.k * (1 - self.p) / self.p**2)

    def factorial_moment2(self) -> float:
        k, p = self.k, self.p
        return float(k * (1 - p) / p**2 + Fraction(k * k) / p**2 - k / p)

    def mgf_upper_bound(self) -> float:
        return -math.log1p(-float(self.p))

    def mgf(self, s: float) -> float:
        self.check_mgf_domain(s)
        p = float(self.p)
        growth = math.exp(s)
        ratio = p * growth / (1.0 - (1.0 - p) * growth)
        return guarded_exp(self.k * math.log(ratio), "nbinom moment generating function")


class Poisson(DiscreteLaw):
    """Poisson law of intensity ``lambda``."""

    law: Literal["pois"] = "pois"
    lam: float = Field(validation_alias=AliasChoices("lambda", "lam"), serialization_alias="lambda")

    @model_validator(mode="after")
    def _validate_parameters(self) -> Poisson:
        if not math.isfinite(self.lam):
            message = f"pois needs a finite lambda, got {self.lam}"
            raise ParameterDomainError(message)
        _check_positive("pois", "lambda", self.lam)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.INTEGER_FROM, 0, None)

    def exact_mass(self, k: int) -> Fraction:
        del k
        message = "Poisson masses involve exp(-lambda) and have no exact rational value"
        raise LawKindError(message)

    def log_mass(self, k: int) -> float:
        if k < 0:
            return -math.inf
        return k * math.log(self.lam) - self.lam - log_factorial(k)

    def mean(self) -> float:
        return self.lam

    def variance(self) -> float:
        return self.lam

    def factorial_moment2(self) -> float:
        return self.lam * self.lam

    def mgf(self, s: float) -> float:
        return guarded_exp(self.lam * math.expm1(s), "pois moment generating function")


__all__ = [
    "EXACT_MASS_LIMIT",
    "Bernoulli",
    "Binomial",
    "Degenerate",
    "DiscreteUniform",
    "Geometric",
    "Hypergeometric",
    "NegativeBinomial",
    "NumFailures",
    "Poisson",
]
