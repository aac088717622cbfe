"""Gaps of the Cauchy-Schwarz, Hoelder, Minkowski and Jensen inequalities."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING

from probkit.core.errors import DomainError

from .random_variable import FiniteRv, exact_covariance, exact_variance, expectation, expectation_of_function

if TYPE_CHECKING:
    from probkit.couples.joint import JointLaw

CONJUGATE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class InequalityGaps:
    """Right side minus left side of each classical inequality; all are nonnegative."""

    cauchy_schwarz: float
    holder: float
    minkowski: float
    jensen: float


def lp_norm(rv: FiniteRv, p: float) -> float:
    """Return ``(E|X|^p)^(1/p)``."""
    if p < 1:
        message = f"Norm exponent must be at least 1, got {p}"
        raise DomainError(message)
    moment = math.fsum(float(weight) * abs(float(value)) ** p for value, weight in rv.pairs())
    return moment ** (1.0 / p)


def inequality_gaps(pair: JointLaw, p: float, q: float, g: Callable[[float], float]) -> InequalityGaps:
    """Evaluate the four inequalities on the pair ``(X, Y)`` and convex *g* applied to ``X``."""
    if p <= 1 or q <= 1 or abs(1.0 / p + 1.0 / q - 1.0) > CONJUGATE_TOLERANCE:
        message = f"Exponents p={p} and q={q} are not conjugate"
        raise DomainError(message)
    x_rv = pair.marginal_x()
    y_rv = pair.marginal_y()

    sigma_product = math.sqrt(float(exact_variance(x_rv)) * float(exact_variance(y_rv)))
    cauchy_schwarz = sigma_product - abs(float(exact_covariance(pair)))

    product_rv = FiniteRv.from_pairs((x * y, weight) for x, y, weight in pair.cells())
    holder = lp_norm(x_rv, p) * lp_norm(y_rv, q) - lp_norm(product_rv, 1.0)

    sum_rv = FiniteRv.from_pairs((x + y, weight) for x, y, weight in pair.cells())
    minkowski = lp_norm(x_rv, p) + lp_norm(y_rv, p) - lp_norm(sum_rv, p)

    jensen = expectation_of_function(x_rv, lambda x: g(float(x))) - g(expectation(x_rv))
    return InequalityGaps(cauchy_schwarz=cauchy_schwarz, holder=holder, minkowski=minkowski, jensen=jensen)


__all__ = ["CONJUGATE_TOLERANCE", "InequalityGaps", "inequality_gaps", "lp_norm"]
