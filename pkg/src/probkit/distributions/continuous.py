"""Continuous laws: uniform, exponential, gamma and normal."""

from __future__ import annotations

import math
from typing import Any, Literal, cast

from pydantic import AliasChoices, Field, model_validator

from probkit.core.errors import ParameterDomainError

from .base import ContinuousLaw, SupportDescriptor, SupportKind, check_level, guarded_exp
from .special import (
    log_gamma,
    normal_cdf,
    normal_pdf,
    normal_quantile,
    regularized_incomplete_gamma,
    regularized_upper_incomplete_gamma,
)


def _check_finite(law: str, **values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            message = f"{law} needs a finite {name}, got {value}"
            raise ParameterDomainError(message)


class Uniform(ContinuousLaw):
    """Uniform law on ``[a, b]``."""

    law: Literal["unif"] = "unif"
    a: float = Field(validation_alias=AliasChoices("min", "a"), serialization_alias="min")
    b: float = Field(validation_alias=AliasChoices("max", "b"), serialization_alias="max")

    @model_validator(mode="after")
    def _validate_parameters(self) -> Uniform:
        _check_finite("unif", min=self.a, max=self.b)
        if not self.a < self.b:
            message = f"unif needs min < max, got min={self.a}, max={self.b}"
            raise ParameterDomainError(message)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.REAL_INTERVAL, self.a, self.b)

    def density(self, x: float) -> float:
        return 1.0 / (self.b - self.a) if self.a <= x <= self.b else 0.0

    def cdf(self, x: float) -> float:
        if x <= self.a:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x - self.a) / (self.b - self.a)

    def quantile(self, s: float) -> float:
        check_level(s)
        return self.a + s * (self.b - self.a)

    def mean(self) -> float:
        return 0.5 * (self.a + self.b)

    def variance(self) -> float:
        return (self.b - self.a) ** 2 / 12.0

    def mgf(self, s: float) -> float:
        if s == 0:
            return 1.0
        width = self.b - self.a
        try:
            return math.exp(self.a * s) * math.expm1(width * s) / (width * s)
        except OverflowError:
            return guarded_exp(math.inf, "unif moment generating function")


class Exponential(ContinuousLaw):
    """Exponential law of rate ``lambda``."""

    law: Literal["exp"] = "exp"
    lam: float = Field(validation_alias=AliasChoices("rate", "lam"), serialization_alias="rate")

    @model_validator(mode="after")
    def _validate_parameters(self) -> Exponential:
        _check_finite("exp", rate=self.lam)
        if not self.lam > 0:
            message = f"exp needs rate > 0, got {self.lam}"
            raise ParameterDomainError(message)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.REAL_INTERVAL, 0.0, math.inf)

    def density(self, x: float) -> float:
        return self.lam * math.exp(-self.lam * x) if x >= 0 else 0.0

    def cdf(self, x: float) -> float:
        return -math.expm1(-self.lam * x) if x > 0 else 0.0

    def sf(self, x: float) -> float:
        return math.exp(-self.lam * x) if x > 0 else 1.0

    def quantile(self, s: float) -> float:
        check_level(s)
        return -math.log1p(-s) / self.lam

    def mean(self) -> float:
        return 1.0 / self.lam

    def variance(self) -> float:
        return 1.0 / (self.lam * self.lam)

    def mgf_upper_bound(self) -> float:
        return self.lam

    def mgf(self, s: float) -> float:
        self.check_mgf_domain(s)
        return self.lam / (self.lam - s)


class Gamma(ContinuousLaw):
    """Gamma law with shape ``a`` and rate ``b``; a ``scale`` payload is converted to ``1/scale``."""

    law: Literal["gamma"] = "gamma"
    a: float = Field(validation_alias=AliasChoices("shape", "a"), serialization_alias="shape")
    b: float = Field(validation_alias=AliasChoices("rate", "b"), serialization_alias="rate")

    @model_validator(mode="before")
    @classmethod
    def _accept_scale(cls, data: object) -> object:
        if isinstance(data, dict) and "scale" in data:
            values = cast("dict[str, Any]", data)
            if "rate" in values or "b" in values:
                message = "gamma takes either rate or scale, not both"
                raise ParameterDomainError(message)
            scale = values["scale"]
            if not isinstance(scale, (int, float)) or isinstance(scale, bool) or not scale > 0:
                message = f"gamma needs scale > 0, got {scale!r}"
                raise ParameterDomainError(message)
            rest = {key: value for key, value in values.items() if key != "scale"}
            return {**rest, "rate": 1.0 / scale}
        return data

    @model_validator(mode="after")
    def _validate_parameters(self) -> Gamma:
        _check_finite("gamma", shape=self.a, rate=self.b)
        if not (self.a > 0 and self.b > 0):
            message = f"gamma needs shape > 0 and rate > 0, got shape={self.a}, rate={self.b}"
            raise ParameterDomainError(message)
        return self

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.REAL_INTERVAL, 0.0, math.inf)

    def density(self, x: float) -> float:
        if x < 0:
            return 0.0
        if x == 0:
            if self.a < 1:
                return math.inf
            return self.b if self.a == 1 else 0.0
        log_density = self.a * math.log(self.b) + (self.a - 1) * math.log(x) - self.b * x - log_gamma(self.a)
        return math.exp(log_density)

    def cdf(self, x: float) -> float:
        return regularized_incomplete_gamma(self.a, self.b * x) if x > 0 else 0.0

    def sf(self, x: float) -> float:
        return regularized_upper_incomplete_gamma(self.a, self.b * x) if x > 0 else 1.0

    def mean(self) -> float:
        return self.a / self.b

    def variance(self) -> float:
        return self.a / (self.b * self.b)

    def mgf_upper_bound(self) -> float:
        return self.b

    def mgf(self, s: float) -> float:
        self.check_mgf_domain(s)
        return guarded_exp(self.a * math.log(self.b / (self.b - s)), "gamma moment generating function")


class Normal(ContinuousLaw):
    """Normal law with mean ``m`` and standard deviation ``sd`` (``sigma2 = sd**2``)."""

    law: Literal["norm"] = "norm"
    m: float = Field(default=0.0, validation_alias=AliasChoices("mean", "m"), serialization_alias="mean")
    sd: float = Field(default=1.0)

    @model_validator(mode="before")
    @classmethod
    def _accept_variance(cls, data: object) -> object:
        if isinstance(data, dict) and "sigma2" in data:
            values = cast("dict[str, Any]", data)
            sigma2 = values["sigma2"]
            if not isinstance(sigma2, (int, float)) or isinstance(sigma2, bool) or not sigma2 > 0:
                message = f"norm needs sigma2 > 0, got {sigma2!r}"
                raise ParameterDomainError(message)
            rest = {key: value for key, value in values.items() if key != "sigma2"}
            return {**rest, "sd": math.sqrt(sigma2)}
        return data

    @model_validator(mode="after")
    def _validate_parameters(self) -> Normal:
        _check_finite("norm", mean=self.m, sd=self.sd)
        if not self.sd > 0:
            message = f"norm needs sd > 0, got {self.sd}"
            raise ParameterDomainError(message)
        return self

    @property
    def sigma2(self) -> float:
        """Variance parameter."""
        return self.sd * self.sd

    def support(self) -> SupportDescriptor:
        return SupportDescriptor(SupportKind.REAL_INTERVAL, -math.inf, math.inf)

    def density(self, x: float) -> float:
        return normal_pdf((x - self.m) / self.sd) / self.sd

    def cdf(self, x: float) -> float:
        return normal_cdf((x - self.m) / self.sd)

    def sf(self, x: float) -> float:
        return normal_cdf((self.m - x) / self.sd)

    def quantile(self, s: float) -> float:
        check_level(s)
        return self.m + self.sd * normal_quantile(s)

    def mean(self) -> float:
        return self.m

    def variance(self) -> float:
        return self.sigma2

    def mgf(self, s: float) -> float:
        return guarded_exp(self.m * s + 0.5 * self.sigma2 * s * s, "norm moment generating function")


__all__ = ["Exponential", "Gamma", "Normal", "Uniform"]
