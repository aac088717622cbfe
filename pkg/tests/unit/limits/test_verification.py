"""Tests for the numeric verification of the limit theorems."""

from __future__ import annotations

import math
from functools import partial

import pytest

from probkit.core.errors import DomainError
from probkit.distributions import normal_interval
from probkit.limits import (
    binomial_poisson_distance,
    clt_interval_error,
    default_poisson_k_max,
    limit_sweep,
    local_limit_ratio_error,
    riemann_normal_integral,
    stirling_sweep,
    wallis_sweep,
)

GRID = (10, 100, 1000, 10_000)


def test_binomial_approaches_poisson() -> None:
    """The largest mass gap shrinks with n and stays below lambda / n."""
    reports = limit_sweep(partial(binomial_poisson_distance, lam=2.0), GRID)
    metrics = [report.metric for report in reports]
    assert metrics == sorted(metrics, reverse=True)
    for report in reports:
        assert report.metric <= 2.0 / report.n
        assert len(report.detail) == default_poisson_k_max(2.0) + 1


def test_poisson_distance_arguments() -> None:
    """lambda / n must be a probability and k_max nonnegative."""
    with pytest.raises(DomainError):
        binomial_poisson_distance(5, 5.0)
    with pytest.raises(DomainError):
        binomial_poisson_distance(0, 1.0)
    with pytest.raises(DomainError):
        binomial_poisson_distance(10, 1.0, k_max=-1)
    assert len(binomial_poisson_distance(10, 1.0, k_max=3).detail) == 4


def test_default_poisson_horizon() -> None:
    """ceil(lambda + 12 sqrt(lambda) + 20)."""
    assert default_poisson_k_max(4.0) == 48
    assert default_poisson_k_max(1.0) == 33


@pytest.mark.parametrize(("a", "b"), [(-1.0, 1.0), (-1.96, 0.5), (0.2, 2.5), (-math.inf, 0.0)])
def test_clt_mirror_symmetry(a: float, b: float) -> None:
    """For p = 1/2 the windows [a, b] and [-b, -a] have the same error."""
    for n in (11, 100, 401):
        direct = clt_interval_error(n, 0.5, a, b)
        mirrored = clt_interval_error(n, 0.5, -b, -a)
        assert direct.metric == pytest.approx(mirrored.metric, rel=1e-9, abs=1e-15)


def test_clt_error_shrinks() -> None:
    """The standardized binomial approaches the normal law."""
    coarse = clt_interval_error(10, 0.5, -1.0, 1.0)
    fine = clt_interval_error(10_000, 0.5, -1.0, 1.0)
    assert fine.metric < coarse.metric
    assert fine.metric < 0.01
    binomial_probability, normal_probability = fine.detail[0]
    assert normal_probability == normal_interval(-1.0, 1.0)
    assert binomial_probability == pytest.approx(normal_probability, abs=0.01)


def test_clt_window_arguments() -> None:
    """Empty windows and degenerate probabilities are rejected."""
    with pytest.raises(DomainError):
        clt_interval_error(10, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        clt_interval_error(10, 1.0, -1.0, 1.0)


def test_local_limit_ratio() -> None:
    """Masses approach the normal density on a bounded window."""
    reports = limit_sweep(lambda n: local_limit_ratio_error(n, 0.3, -2.0, 2.0), (100, 10_000))
    assert reports[1].metric < reports[0].metric
    assert reports[1].metric < 0.02
    assert all(-2.0 <= z <= 2.0 for z, _ in reports[1].detail)


def test_local_limit_arguments() -> None:
    """The window must be bounded and contain a lattice point."""
    with pytest.raises(DomainError):
        local_limit_ratio_error(100, 0.5, -math.inf, 1.0)
    with pytest.raises(DomainError):
        local_limit_ratio_error(4, 0.5, 0.1, 0.2)


def test_riemann_sum_matches_the_normal_interval() -> None:
    """Midpoint sums of the density converge to Phi(b) - Phi(a)."""
    assert riemann_normal_integral(-1.96, 1.96, 2000) == pytest.approx(0.9500042, abs=1e-6)
    coarse = abs(riemann_normal_integral(0.0, 2.0, 10) - normal_interval(0.0, 2.0))
    fine = abs(riemann_normal_integral(0.0, 2.0, 1000) - normal_interval(0.0, 2.0))
    assert fine < coarse
    assert riemann_normal_integral(1.0, 1.0, 5) == 0.0
    with pytest.raises(DomainError):
        riemann_normal_integral(0.0, 1.0, 0)
    with pytest.raises(DomainError):
        riemann_normal_integral(1.0, 0.0, 10)


def test_stirling_sweep() -> None:
    """The log error is near 1/(12n) and inside its bound."""
    reports = stirling_sweep(GRID)
    assert reports[0].metric == pytest.approx(0.0083306, abs=1e-7)
    for report in reports:
        bound, error = report.detail[0]
        assert error <= bound
        assert report.metric == pytest.approx(1.0 / (12.0 * report.n), rel=0.01)


def test_wallis_sweep() -> None:
    """Wallis terms decrease towards pi."""
    reports = wallis_sweep(GRID)
    metrics = [report.metric for report in reports]
    assert metrics == sorted(metrics, reverse=True)
    assert metrics[-1] < 1e-3
    assert all(report.detail[0][0] > math.pi for report in reports)
