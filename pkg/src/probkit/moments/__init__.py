"""Expectations, variances, moment summaries and the classical inequalities."""

from .inequalities import CONJUGATE_TOLERANCE, InequalityGaps, inequality_gaps, lp_norm
from .random_variable import (
    FiniteRv,
    MomentSummary,
    correlation,
    covariance,
    cumulative_table,
    exact_covariance,
    exact_expectation,
    exact_expectation_of_function,
    exact_factorial_moment2,
    exact_variance,
    expectation,
    expectation_of_function,
    interval_probability,
    law_interval_probability,
    law_to_rv,
    markov_bound,
    rv_mgf,
    rvc,
    summarize,
    summarize_law,
    tchebychev_interval,
    variance_of,
    variance_of_linear_combination,
)

__all__ = [
    "CONJUGATE_TOLERANCE",
    "FiniteRv",
    "InequalityGaps",
    "MomentSummary",
    "correlation",
    "covariance",
    "cumulative_table",
    "exact_covariance",
    "exact_expectation",
    "exact_expectation_of_function",
    "exact_factorial_moment2",
    "exact_variance",
    "expectation",
    "expectation_of_function",
    "inequality_gaps",
    "interval_probability",
    "law_interval_probability",
    "law_to_rv",
    "lp_norm",
    "markov_bound",
    "rv_mgf",
    "rvc",
    "summarize",
    "summarize_law",
    "tchebychev_interval",
    "variance_of",
    "variance_of_linear_combination",
]
