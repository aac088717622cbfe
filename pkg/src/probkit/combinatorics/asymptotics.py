"""Log-space asymptotics for factorials: Stirling's formula, Wallis terms, ln n!."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from probkit.core.errors import DomainError

from .counting import factorial

logger = logging.getLogger(__name__)

STIRLING_ETA = 0.01
LOG_FACTORIAL_EXACT_LIMIT = 256
WALLIS_EXACT_LIMIT = 10

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
# Bernoulli-number coefficients B_{2k} / (2k(2k-1)) of the Stirling series.
_STIRLING_SERIES = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
)


@dataclass(frozen=True)
class StirlingApprox:
    """Stirling's approximation of ``n!`` with the bound on its log error."""

    n: int
    value: float
    log_value: float
    theta_bound: float

    def covers(self, log_exact: float) -> bool:
        """Return whether ``|log_exact - log_value|`` stays inside ``theta_bound``."""
        return abs(log_exact - self.log_value) <= self.theta_bound


def _require_positive(n: int) -> None:
    if n < 1:
        message = f"n must be a positive integer, got {n}"
        raise DomainError(message)


def stirling_approx(n: int) -> StirlingApprox:
    """Return ``sqrt(2 pi n) (n/e)^n`` evaluated through its logarithm.

    ``value`` is ``inf`` once the approximation leaves the double range;
    ``log_value`` stays finite.
    """
    _require_positive(n)
    log_value = _HALF_LOG_TWO_PI + 0.5 * math.log(n) + n * (math.log(n) - 1.0)
    try:
        value = math.exp(log_value)
    except OverflowError:
        value = math.inf
    return StirlingApprox(
        n=n,
        value=value,
        log_value=log_value,
        theta_bound=(1.0 + STIRLING_ETA) / (12.0 * n),
    )


def log_factorial(n: int) -> float:
    """Return ``ln(n!)``.

    Up to ``LOG_FACTORIAL_EXACT_LIMIT`` the logarithms are summed exactly;
    above it the Stirling series with six correction terms is used.
    """
    if n < 0:
        message = f"n must be a nonnegative integer, got {n}"
        raise DomainError(message)
    if n <= LOG_FACTORIAL_EXACT_LIMIT:
        return math.fsum(math.log(k) for k in range(2, n + 1))
    logger.debug("log_factorial uses the Stirling series", extra={"n": n})
    inverse = 1.0 / n
    inverse_square = inverse * inverse
    correction = 0.0
    power = inverse
    for coefficient in _STIRLING_SERIES:
        correction += coefficient * power
        power *= inverse_square
    return math.fsum((n * math.log(n), -float(n), _HALF_LOG_TWO_PI, 0.5 * math.log(n), correction))


def log_combinations(n: int, p: int) -> float:
    """Return ``ln C(n, p)`` (``-inf`` when ``p > n``)."""
    if n < 0 or p < 0:
        message = f"n and p must be nonnegative, got n={n}, p={p}"
        raise DomainError(message)
    if p > n:
        return -math.inf
    return log_factorial(n) - log_factorial(p) - log_factorial(n - p)


def wallis_term(n: int) -> float:
    """Return ``2^(4n) (n!)^4 / (n ((2n)!)^2)``, whose limit is pi."""
    _require_positive(n)
    if n <= WALLIS_EXACT_LIMIT:
        numerator = 2 ** (4 * n) * factorial(n) ** 4
        denominator = n * factorial(2 * n) ** 2
        return numerator / denominator
    log_term = 4 * n * math.log(2.0) + 4 * log_factorial(n) - math.log(n) - 2 * log_factorial(2 * n)
    return math.exp(log_term)


__all__ = [
    "LOG_FACTORIAL_EXACT_LIMIT",
    "STIRLING_ETA",
    "StirlingApprox",
    "log_combinations",
    "log_factorial",
    "stirling_approx",
    "wallis_term",
]
