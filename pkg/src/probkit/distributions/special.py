"""Special functions: log-gamma, regularized incomplete gamma, the normal law, CDF inversion."""

from __future__ import annotations

import logging
import math
import sys
from collections.abc import Callable

from probkit.core.errors import DomainError

logger = logging.getLogger(__name__)

SQRT_TWO = math.sqrt(2.0)
INV_SQRT_TWO_PI = 1.0 / math.sqrt(2.0 * math.pi)
INCOMPLETE_GAMMA_ACCURACY = 1e-15
INVERSION_TOLERANCE = 1e-13
_TINY = sys.float_info.min / sys.float_info.epsilon


def log_gamma(a: float) -> float:
    """Return ``ln Gamma(a)`` for ``a > 0``."""
    if not a > 0:
        message = f"log_gamma needs a positive argument, got {a}"
        raise DomainError(message)
    return math.lgamma(a)


def _max_iterations(a: float) -> int:
    return 200 + int(20.0 * math.sqrt(a))


def _series_lower(a: float, x: float) -> float:
    """Series for ``P(a, x)``, accurate when ``x < a + 1``."""
    term = 1.0 / a
    total = term
    denominator = a
    for _ in range(_max_iterations(a)):
        denominator += 1.0
        term *= x / denominator
        total += term
        if abs(term) < abs(total) * INCOMPLETE_GAMMA_ACCURACY:
            break
    else:
        logger.debug("Incomplete gamma series hit its iteration cap", extra={"a": a, "x": x})
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _continued_fraction_upper(a: float, x: float) -> float:
    """Modified Lentz continued fraction for ``Q(a, x)``, accurate when ``x >= a + 1``."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _max_iterations(a) + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < INCOMPLETE_GAMMA_ACCURACY:
            break
    else:
        logger.debug("Incomplete gamma continued fraction hit its iteration cap", extra={"a": a, "x": x})
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def regularized_incomplete_gamma(a: float, x: float) -> float:
    """Return ``P(a, x) = gamma(a, x) / Gamma(a)``, the Gamma(a, 1) distribution function."""
    if not a > 0:
        message = f"Incomplete gamma needs a > 0, got {a}"
        raise DomainError(message)
    if x < 0 or math.isnan(x):
        message = f"Incomplete gamma needs x >= 0, got {x}"
        raise DomainError(message)
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        value = _series_lower(a, x)
    else:
        value = 1.0 - _continued_fraction_upper(a, x)
    return min(1.0, max(0.0, value))


def regularized_upper_incomplete_gamma(a: float, x: float) -> float:
    """Return ``Q(a, x) = 1 - P(a, x)`` without cancellation in the upper tail."""
    if not a > 0 or x < 0 or math.isnan(x):
        message = f"Incomplete gamma needs a > 0 and x >= 0, got a={a}, x={x}"
        raise DomainError(message)
    if x == 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return min(1.0, max(0.0, 1.0 - _series_lower(a, x)))
    return min(1.0, max(0.0, _continued_fraction_upper(a, x)))


def normal_pdf(x: float) -> float:
    """Return the standard normal density."""
    return INV_SQRT_TWO_PI * math.exp(-0.5 * x * x)


def normal_cdf(x: float) -> float:
    """Return the standard normal distribution function ``Phi(x)``."""
    return 0.5 * math.erfc(-x / SQRT_TWO)


def normal_interval(a: float, b: float) -> float:
    """Return ``Phi(b) - Phi(a)``; mirrored windows give identical results."""
    if b <= a:
        return 0.0
    if a >= 0:
        return 0.5 * (math.erfc(a / SQRT_TWO) - math.erfc(b / SQRT_TWO))
    if b <= 0:
        return 0.5 * (math.erfc(-b / SQRT_TWO) - math.erfc(-a / SQRT_TWO))
    return 0.5 * (math.erf(b / SQRT_TWO) - math.erf(a / SQRT_TWO))


def invert_cdf(
    cdf: Callable[[float], float],
    pdf: Callable[[float], float],
    s: float,
    lower: float,
    upper: float,
) -> float:
    """Solve ``cdf(x) = s`` on ``[lower, upper]`` by Newton steps guarded by bisection.

    The bracket must satisfy ``cdf(lower) <= s <= cdf(upper)``.
    """
    x = 0.5 * (lower + upper)
    for _ in range(400):
        gap = cdf(x) - s
        if gap == 0:
            return x
        if gap < 0:
            lower = x
        else:
            upper = x
        slope = pdf(x)
        candidate = x - gap / slope if slope > 0 and math.isfinite(slope) else math.nan
        if not lower < candidate < upper:
            candidate = 0.5 * (lower + upper)
        if abs(candidate - x) <= INVERSION_TOLERANCE * max(1.0, abs(x)):
            return candidate
        x = candidate
    logger.debug("CDF inversion hit its iteration cap", extra={"s": s, "x": x})
    return x


def expand_bracket(
    cdf: Callable[[float], float],
    s: float,
    lower: float,
    upper: float,
    *,
    floor: float = -math.inf,
) -> tuple[float, float]:
    """Widen ``[lower, upper]`` geometrically until it brackets level *s*."""
    width = max(1.0, upper - lower)
    while cdf(lower) > s and lower > floor:
        lower = max(floor, lower - width)
        width *= 2.0
    width = max(1.0, upper - lower)
    while cdf(upper) < s:
        upper += width
        width *= 2.0
        if not math.isfinite(upper):
            message = f"Cannot bracket the quantile at level {s}"
            raise DomainError(message)
    return lower, upper


def normal_quantile(s: float) -> float:
    """Return ``Phi^{-1}(s)`` for ``0 < s < 1``."""
    if not 0 < s < 1:
        message = f"Quantile level must lie in (0, 1), got {s}"
        raise DomainError(message)
    lower, upper = expand_bracket(normal_cdf, s, -1.0, 1.0)
    return invert_cdf(normal_cdf, normal_pdf, s, lower, upper)


__all__ = [
    "INV_SQRT_TWO_PI",
    "SQRT_TWO",
    "expand_bracket",
    "invert_cdf",
    "log_gamma",
    "normal_cdf",
    "normal_interval",
    "normal_pdf",
    "normal_quantile",
    "regularized_incomplete_gamma",
    "regularized_upper_incomplete_gamma",
]
