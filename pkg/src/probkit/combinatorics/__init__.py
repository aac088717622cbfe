"""Exact counting functions and factorial asymptotics."""

from .asymptotics import (
    LOG_FACTORIAL_EXACT_LIMIT,
    STIRLING_ETA,
    StirlingApprox,
    log_combinations,
    log_factorial,
    stirling_approx,
    wallis_term,
)
from .counting import (
    ExactCount,
    arrangements,
    binomial_theorem_eval,
    combinations,
    compositions,
    count_injections,
    count_maps,
    factorial,
    multinomial,
    multinomial_theorem_eval,
    pascal_row,
)

__all__ = [
    "LOG_FACTORIAL_EXACT_LIMIT",
    "STIRLING_ETA",
    "ExactCount",
    "StirlingApprox",
    "arrangements",
    "binomial_theorem_eval",
    "combinations",
    "compositions",
    "count_injections",
    "count_maps",
    "factorial",
    "log_combinations",
    "log_factorial",
    "multinomial",
    "multinomial_theorem_eval",
    "pascal_row",
    "stirling_approx",
    "wallis_term",
]
