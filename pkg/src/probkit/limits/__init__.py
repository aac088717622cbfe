"""Numeric checks of the limit theorems."""

from .verification import (
    LimitReport,
    binomial_poisson_distance,
    clt_interval_error,
    default_poisson_k_max,
    limit_sweep,
    local_limit_ratio_error,
    riemann_normal_integral,
    stirling_sweep,
    wallis_sweep,
)

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
