"""Numeric verification of the binomial limit theorems and the factorial asymptotics."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import numpy as np

from probkit.combinatorics import factorial, stirling_approx, wallis_term
from probkit.core.errors import DomainError
from probkit.distributions import Binomial, Poisson, normal_interval
from probkit.distributions.special import INV_SQRT_TWO_PI

logger = logging.getLogger(__name__)

LOG_TWO_PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class LimitReport:
    """Convergence metric at one ``n``, with the per-point values behind it."""

    n: int
    metric: float
    detail: tuple[tuple[float, float], ...] = ()


def default_poisson_k_max(lam: float) -> int:
    """Return ``ceil(lambda + 12 sqrt(lambda) + 20)``, past all mass above 1e-14."""
    return math.ceil(lam + 12.0 * math.sqrt(lam) + 20.0)


def _check_probability(p: float) -> None:
    if not 0 < p < 1:
        message = f"p must lie strictly between 0 and 1, got {p}"
        raise DomainError(message)


def _check_n(n: int) -> None:
    if n < 1:
        message = f"n must be a positive integer, got {n}"
        raise DomainError(message)


def binomial_poisson_distance(n: int, lam: float, k_max: int | None = None) -> LimitReport:
    """Return ``max_k |Binomial(n, lambda/n)(k) - Poisson(lambda)(k)|`` over ``0..k_max``."""
    _check_n(n)
    if not 0 < lam < n:
        message = f"binomial to Poisson needs 0 < lambda/n < 1, got lambda={lam}, n={n}"
        raise DomainError(message)
    if k_max is None:
        k_max = default_poisson_k_max(lam)
    if k_max < 0:
        message = f"k_max must be nonnegative, got {k_max}"
        raise DomainError(message)
    binomial = Binomial(n=n, p=lam / n)
    poisson = Poisson(lam=lam)
    detail = tuple((float(k), abs(binomial.mass(k) - poisson.mass(k))) for k in range(k_max + 1))
    metric = max(error for _, error in detail)
    logger.debug("binomial_poisson_distance", extra={"n": n, "lambda": lam, "metric": metric})
    return LimitReport(n=n, metric=metric, detail=detail)


def _window(n: int, p: float, a: float, b: float) -> list[tuple[int, float]]:
    """Return the ``(j, z_j)`` with ``z_j = (j - np)/sqrt(npq)`` in the closed window ``[a, b]``."""
    centre = n * p
    spread = math.sqrt(n * p * (1.0 - p))
    first = 0 if not math.isfinite(a) else max(0, math.floor(centre + a * spread) - 1)
    last = n if not math.isfinite(b) else min(n, math.ceil(centre + b * spread) + 1)
    points: list[tuple[int, float]] = []
    for j in range(first, last + 1):
        z = (j - centre) / spread
        if a <= z <= b:
            points.append((j, z))
    return points


def local_limit_ratio_error(n: int, p: float, a: float, b: float) -> LimitReport:
    """Return ``max_j |P(X_n = j) sqrt(2 pi npq) exp(z_j^2 / 2) - 1|`` over the window."""
    _check_n(n)
    _check_probability(p)
    if not (math.isfinite(a) and math.isfinite(b)) or a > b:
        message = f"The local window must be a bounded interval, got [{a}, {b}]"
        raise DomainError(message)
    points = _window(n, p, a, b)
    if not points:
        message = f"No integer j maps into [{a}, {b}] for n={n}, p={p}"
        raise DomainError(message)
    law = Binomial(n=n, p=p)
    log_scale = 0.5 * (LOG_TWO_PI + math.log(n * p * (1.0 - p)))
    detail = tuple((z, abs(math.expm1(law.log_mass(j) + log_scale + 0.5 * z * z))) for j, z in points)
    return LimitReport(n=n, metric=max(error for _, error in detail), detail=detail)


def clt_interval_error(n: int, p: float, a: float, b: float) -> LimitReport:
    """Return ``|P(a <= Z_n <= b) - (Phi(b) - Phi(a))|`` for the standardized binomial."""
    _check_n(n)
    _check_probability(p)
    if not a < b:
        message = f"The window needs a < b, got a={a}, b={b}"
        raise DomainError(message)
    law = Binomial(n=n, p=p)
    points = _window(n, p, a, b)
    masses = [law.mass(j) for j, _ in points]
    binomial_probability = math.fsum(masses)
    normal_probability = normal_interval(a, b)
    metric = abs(binomial_probability - normal_probability)
    return LimitReport(n=n, metric=metric, detail=((binomial_probability, normal_probability),))


def riemann_normal_integral(a: float, b: float, steps: int) -> float:
    """Return the midpoint Riemann sum of the standard normal density over ``[a, b]``."""
    if steps < 1:
        message = f"steps must be positive, got {steps}"
        raise DomainError(message)
    if a > b:
        message = f"The integral needs a <= b, got a={a}, b={b}"
        raise DomainError(message)
    if a == b:
        return 0.0
    width = (b - a) / steps
    midpoints = a + (np.arange(steps, dtype=float) + 0.5) * width
    return float(np.sum(np.exp(-0.5 * midpoints * midpoints)) * width * INV_SQRT_TWO_PI)


def limit_sweep(metric_fn: Callable[[int], LimitReport], grid: Iterable[int]) -> list[LimitReport]:
    """Evaluate *metric_fn* along an ``n`` grid."""
    return [metric_fn(n) for n in grid]


def stirling_sweep(grid: Iterable[int]) -> list[LimitReport]:
    """Return ``|ln n! - ln stirling(n)|`` with the bound ``(1 + eta)/(12n)`` as detail."""
    reports: list[LimitReport] = []
    for n in grid:
        approx = stirling_approx(n)
        error = abs(math.log(factorial(n)) - approx.log_value)
        reports.append(LimitReport(n=n, metric=error, detail=((approx.theta_bound, error),)))
    return reports


def wallis_sweep(grid: Iterable[int]) -> list[LimitReport]:
    """Return ``|wallis_term(n) - pi|`` along the grid."""
    reports: list[LimitReport] = []
    for n in grid:
        term = wallis_term(n)
        reports.append(LimitReport(n=n, metric=abs(term - math.pi), detail=((term, math.pi),)))
    return reports


__all__ = [
    "LimitReport",
    "binomial_poisson_distance",
    "clt_interval_error",
    "default_poisson_k_max",
    "limit_sweep",
    "local_limit_ratio_error",
    "riemann_normal_integral",
    "stirling_sweep",
    "wallis_sweep",
]
