"""Tests for the special functions behind the continuous laws."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probkit.core.errors import DomainError
from probkit.distributions import (
    invert_cdf,
    log_gamma,
    normal_cdf,
    normal_interval,
    normal_quantile,
    regularized_incomplete_gamma,
    regularized_upper_incomplete_gamma,
)


def test_normal_cdf_reference_values() -> None:
    """Tabulated values of the standard normal distribution function."""
    assert normal_cdf(0.0) == 0.5
    assert normal_cdf(-2.0) == pytest.approx(0.02275013, abs=1e-8)
    assert normal_cdf(1.96) == pytest.approx(0.9750021, abs=1e-7)
    assert normal_cdf(-40.0) == 0.0


@settings(derandomize=True, max_examples=1000)
@given(st.floats(min_value=-8, max_value=8), st.floats(min_value=0, max_value=8))
def test_normal_interval_is_mirror_symmetric(a: float, width: float) -> None:
    """P(a < Z < b) equals P(-b < Z < -a) exactly."""
    b = a + width
    assert normal_interval(a, b) == normal_interval(-b, -a)
    assert normal_interval(a, b) == pytest.approx(normal_cdf(b) - normal_cdf(a), abs=1e-15)


def test_empty_normal_interval() -> None:
    """Reversed bounds give zero."""
    assert normal_interval(1.0, -1.0) == 0.0


@pytest.mark.parametrize(("s", "expected"), [(0.5, 0.0), (0.975, 1.959964), (0.02275013, -2.0), (1e-10, -6.361341)])
def test_normal_quantile(s: float, expected: float) -> None:
    """Inverse of the standard normal distribution function."""
    assert normal_quantile(s) == pytest.approx(expected, abs=1e-6)


def test_normal_quantile_needs_open_level() -> None:
    """Levels 0 and 1 have no finite quantile."""
    with pytest.raises(DomainError):
        normal_quantile(1.0)


def test_log_gamma() -> None:
    """ln Gamma matches log-factorials at integers and sqrt(pi) at one half."""
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)
    with pytest.raises(DomainError):
        log_gamma(0.0)


@settings(derandomize=True, max_examples=1000)
@given(st.floats(min_value=0, max_value=50))
def test_unit_shape_incomplete_gamma(x: float) -> None:
    """P(1, x) = 1 - exp(-x)."""
    assert regularized_incomplete_gamma(1.0, x) == pytest.approx(-math.expm1(-x), rel=1e-12, abs=1e-15)


@settings(derandomize=True, max_examples=1000)
@given(st.floats(min_value=0.1, max_value=40), st.floats(min_value=0, max_value=80))
def test_incomplete_gammas_are_complementary(a: float, x: float) -> None:
    """P(a, x) + Q(a, x) = 1."""
    total = regularized_incomplete_gamma(a, x) + regularized_upper_incomplete_gamma(a, x)
    assert total == pytest.approx(1.0, abs=1e-12)


def test_incomplete_gamma_integer_shape() -> None:
    """Q(n, x) is a Poisson tail for integer n."""
    x = 3.0
    poisson_head = math.fsum(math.exp(-x) * x**k / math.factorial(k) for k in range(4))
    assert regularized_upper_incomplete_gamma(4.0, x) == pytest.approx(poisson_head, rel=1e-12)


def test_incomplete_gamma_rejects_bad_arguments() -> None:
    """Shape must be positive and the argument nonnegative."""
    with pytest.raises(DomainError):
        regularized_incomplete_gamma(0.0, 1.0)
    with pytest.raises(DomainError):
        regularized_incomplete_gamma(1.0, -1.0)
    with pytest.raises(DomainError):
        regularized_upper_incomplete_gamma(-1.0, 1.0)


def test_invert_cdf_on_a_closed_form() -> None:
    """Newton steps with bisection recover the exponential quantile."""

    def cdf(x: float) -> float:
        return -math.expm1(-x)

    def pdf(x: float) -> float:
        return math.exp(-x)

    root = invert_cdf(cdf, pdf, 0.9, 0.0, 10.0)
    assert root == pytest.approx(math.log(10.0), rel=1e-12)
