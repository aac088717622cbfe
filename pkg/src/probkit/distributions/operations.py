"""Module-level operations over any catalogued law."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from probkit.core.errors import DomainError, NumericOverflowError

from .base import BaseLaw, SupportDescriptor, guarded_exp, require_continuous, require_discrete

if TYPE_CHECKING:
    from fractions import Fraction

    from .rng import Rng


def mass(law: BaseLaw, k: int) -> float:
    """Return ``P(X = k)`` of a discrete law."""
    return require_discrete(law).mass(k)


def exact_mass(law: BaseLaw, k: int) -> Fraction:
    """Return ``P(X = k)`` exactly for a discrete law with rational parameters."""
    return require_discrete(law).exact_mass(k)


def log_mass(law: BaseLaw, k: int) -> float:
    """Return ``ln P(X = k)`` of a discrete law."""
    return require_discrete(law).log_mass(k)


def density(law: BaseLaw, x: float) -> float:
    """Return the density of a continuous law at *x*."""
    return require_continuous(law).density(x)


def cdf(law: BaseLaw, x: float) -> float:
    """Return ``P(X <= x)``."""
    return law.cdf(x)


def sf(law: BaseLaw, x: float) -> float:
    """Return ``P(X > x)``."""
    return law.sf(x)


def quantile(law: BaseLaw, s: float) -> float:
    """Return ``inf{x : F(x) >= s}`` for ``0 < s < 1``."""
    return law.quantile(s)


def mean(law: BaseLaw) -> float:
    """Return ``E(X)``."""
    return law.mean()


def variance(law: BaseLaw) -> float:
    """Return ``Var(X)``."""
    return law.variance()


def factorial_moment2(law: BaseLaw) -> float:
    """Return ``E(X(X - 1))`` of a discrete law."""
    return require_discrete(law).factorial_moment2()


def mgf(law: BaseLaw, s: float) -> float:
    """Return ``E(exp(sX))`` inside the law's convergence region."""
    return law.mgf(s)


def mgf_affine(law: BaseLaw, a: float, b: float, s: float) -> float:
    """Return the MGF of ``aX + b`` at *s*, ``exp(bs) mgf(as)``."""
    value = guarded_exp(b * s, "affine moment generating function") * law.mgf(a * s)
    if math.isinf(value):
        message = "affine moment generating function overflows the double range"
        raise NumericOverflowError(message)
    return value


def second_mgf(law: BaseLaw, s: float) -> float:
    """Return ``E(s^X) = mgf(ln s)`` for ``s > 0``."""
    if not s > 0:
        message = f"The second generating function needs s > 0, got {s}"
        raise DomainError(message)
    return law.mgf(math.log(s))


def support(law: BaseLaw) -> SupportDescriptor:
    """Return the values set of *law*."""
    return law.support()


def sample(law: BaseLaw, rng: Rng, count: int) -> list[float]:
    """Draw *count* independent values using *rng*."""
    return law.sample(rng, count)


__all__ = [
    "cdf",
    "density",
    "exact_mass",
    "factorial_moment2",
    "log_mass",
    "mass",
    "mean",
    "mgf",
    "mgf_affine",
    "quantile",
    "sample",
    "second_mgf",
    "sf",
    "support",
    "variance",
]
