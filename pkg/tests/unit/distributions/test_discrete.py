"""Tests for the discrete law catalog."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probkit.core.errors import DomainError, LawKindError, ParameterDomainError
from probkit.distributions import (
    Bernoulli,
    Binomial,
    Degenerate,
    DiscreteLaw,
    DiscreteUniform,
    Geometric,
    Hypergeometric,
    NegativeBinomial,
    NumFailures,
    Poisson,
    Rng,
    SupportKind,
    factorial_moment2,
    second_mgf,
)

if TYPE_CHECKING:
    from collections.abc import Callable

LAZY_STUDENT = Binomial(n=20, p=Fraction(1, 4))

DISCRETE_LAWS: list[DiscreteLaw] = [
    Bernoulli(p=Fraction(3, 10)),
    DiscreteUniform(n=6),
    LAZY_STUDENT,
    Hypergeometric(marked=4, unmarked=6, draws=3),
    Geometric(p=Fraction(3, 10)),
    NumFailures(p=Fraction(2, 5)),
    NegativeBinomial(k=3, p=Fraction(1, 2)),
    Poisson(lam=2.5),
]


KS_CRITICAL = 1.95
"""One-in-a-thousand critical value of the scaled Kolmogorov-Smirnov distance."""


def _ids(law: DiscreteLaw) -> str:
    return law.law


def _ks_distance(law: DiscreteLaw, draws: list[float]) -> float:
    ordered = np.sort(np.asarray(draws))
    points, _ = law.cumulative_table()
    empirical = np.searchsorted(ordered, np.asarray(points), side="right") / len(ordered)
    levels = np.array([law.cdf(k) for k in points])
    return float(np.abs(empirical - levels).max())


def test_reference_masses() -> None:
    """Hand-evaluated masses of the catalog."""
    assert LAZY_STUDENT.mass(5) == pytest.approx(0.2023312, abs=1e-7)
    assert Hypergeometric(marked=4, unmarked=6, draws=3).exact_mass(1) == Fraction(1, 2)
    assert Poisson(lam=1.0).mass(0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    assert Geometric(p=Fraction(1, 2)).mass(3) == pytest.approx(0.125, rel=1e-15)
    assert NumFailures(p=Fraction(1, 2)).mass(0) == pytest.approx(0.5, rel=1e-15)
    assert DiscreteUniform(n=6).exact_mass(4) == Fraction(1, 6)
    assert Degenerate(c=Fraction(3)).mass(3) == 1.0


def test_masses_vanish_off_support() -> None:
    """Masses are zero and log-masses minus infinity outside the support."""
    assert LAZY_STUDENT.mass(21) == 0.0
    assert LAZY_STUDENT.mass(-1) == 0.0
    assert LAZY_STUDENT.log_mass(-1) == -math.inf
    assert Geometric(p=Fraction(1, 2)).mass(0) == 0.0
    assert NegativeBinomial(k=3, p=Fraction(1, 2)).mass(2) == 0.0
    assert Hypergeometric(marked=4, unmarked=6, draws=3).mass(4) == 0.0


def test_lazy_student_tail() -> None:
    """Twenty four-choice questions answered at random: ten or more right answers is rare."""
    assert LAZY_STUDENT.cdf(9) == pytest.approx(0.9861356, abs=1e-7)
    assert LAZY_STUDENT.sf(9) == pytest.approx(0.01386442, abs=1e-7)
    assert 1.0 - LAZY_STUDENT.cdf(9) == pytest.approx(LAZY_STUDENT.sf(9), abs=1e-12)


def test_reference_moments() -> None:
    """Means, variances and second factorial moments in closed form."""
    assert LAZY_STUDENT.mean() == pytest.approx(5.0)
    assert LAZY_STUDENT.variance() == pytest.approx(3.75)
    hyper = Hypergeometric(marked=4, unmarked=6, draws=3)
    assert hyper.mean() == pytest.approx(1.2)
    assert hyper.variance() == pytest.approx(0.56)
    poisson = Poisson(lam=2.5)
    assert poisson.mean() == poisson.variance() == 2.5
    assert factorial_moment2(poisson) == pytest.approx(6.25)
    assert factorial_moment2(Geometric(p=Fraction(1, 2))) == pytest.approx(4.0)
    assert factorial_moment2(Bernoulli(p=Fraction(1, 3))) == 0.0


def test_hypergeometric_accepts_urn_parameters() -> None:
    """N, M and r describe the same urn as marked, unmarked and draws."""
    law = Hypergeometric.model_validate({"N": 10, "M": 4, "r": 3})
    assert (law.marked, law.unmarked, law.draws) == (4, 6, 3)
    assert law.theta == Fraction(2, 5)
    bounds = Hypergeometric(marked=2, unmarked=3, draws=4).support()
    assert (bounds.lower, bounds.upper) == (1, 2)


@pytest.mark.parametrize(
    "build",
    [
        lambda: Binomial(n=0, p=Fraction(1, 2)),
        lambda: Binomial(n=5, p=Fraction(0)),
        lambda: Bernoulli(p=Fraction(1)),
        lambda: Geometric(p=Fraction(3, 2)),
        lambda: NegativeBinomial(k=0, p=Fraction(1, 2)),
        lambda: Poisson(lam=0.0),
        lambda: Poisson(lam=math.inf),
        lambda: DiscreteUniform(n=0),
        lambda: Hypergeometric(marked=2, unmarked=1, draws=4),
        lambda: Hypergeometric(marked=-1, unmarked=3, draws=1),
    ],
)
def test_invalid_parameters_are_rejected(build: Callable[[], object]) -> None:
    """Parameter invariants are checked at construction."""
    with pytest.raises(ParameterDomainError):
        build()


def test_poisson_has_no_exact_masses() -> None:
    """Poisson masses are transcendental."""
    with pytest.raises(LawKindError):
        Poisson(lam=2.0).exact_mass(1)


@pytest.mark.parametrize("law", DISCRETE_LAWS, ids=_ids)
def test_masses_add_up_to_one(law: DiscreteLaw) -> None:
    """The cumulative scan ends at one and agrees with the summed masses."""
    points, levels = law.cumulative_table()
    assert levels[-1] == pytest.approx(1.0, abs=1e-12)
    assert math.fsum(law.mass(k) for k in points) == pytest.approx(1.0, abs=1e-12)
    assert all(earlier <= later for earlier, later in zip(levels, levels[1:], strict=False))


def test_large_binomial_uses_log_space() -> None:
    """Masses of wide binomials stay finite and normalized."""
    law = Binomial(n=1000, p=Fraction(3, 10))
    assert math.fsum(law.mass(k) for k in range(1001)) == pytest.approx(1.0, abs=1e-12)
    symmetric = Binomial(n=1001, p=Fraction(1, 2))
    for k in range(0, 1002, 50):
        assert symmetric.mass(k) == pytest.approx(symmetric.mass(1001 - k), rel=1e-12)


@pytest.mark.parametrize("law", DISCRETE_LAWS, ids=_ids)
def test_cdf_and_sf_are_complementary(law: DiscreteLaw) -> None:
    """F(x) + P(X > x) = 1 at every support point."""
    lower = int(law.support().lower)
    for k in range(lower - 1, lower + 12):
        assert law.cdf(k) + law.sf(k) == pytest.approx(1.0, abs=1e-12)


@settings(derandomize=True, max_examples=1000)
@given(st.floats(min_value=1e-9, max_value=1 - 1e-9))
def test_quantile_is_the_generalized_inverse(s: float) -> None:
    """q(s) is the smallest point with F(q(s)) >= s."""
    for law in (LAZY_STUDENT, Poisson(lam=3.0), Geometric(p=Fraction(3, 10)), NumFailures(p=Fraction(1, 4))):
        k = law.quantile(s)
        assert law.cdf(k) >= s
        if k > law.support().lower:
            assert law.cdf(k - 1) < s


def test_binomial_median() -> None:
    """The lazy student's median score is five."""
    assert LAZY_STUDENT.quantile(0.5) == 5


def test_quantile_levels_are_open() -> None:
    """Levels 0 and 1 have no quantile."""
    for s in (0.0, 1.0, -0.5):
        with pytest.raises(DomainError):
            LAZY_STUDENT.quantile(s)


@settings(derandomize=True, max_examples=1000)
@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30))
def test_failures_count_is_memoryless(k: int, m: int) -> None:
    """P(X >= k + m | X >= k) = P(X >= m)."""
    law = NumFailures(p=Fraction(1, 5))
    conditional = law.sf(k + m - 1) / law.sf(k - 1)
    assert conditional == pytest.approx(law.sf(m - 1), rel=1e-12)


@pytest.mark.parametrize("law", DISCRETE_LAWS, ids=_ids)
def test_mgf_derivatives_give_moments(law: DiscreteLaw) -> None:
    """Finite differences of the MGF at zero recover E(X) and E(X^2)."""
    h = 1e-4
    up, centre, down = law.mgf(h), law.mgf(0.0), law.mgf(-h)
    assert centre == pytest.approx(1.0, abs=1e-15)
    assert (up - down) / (2 * h) == pytest.approx(law.mean(), rel=1e-6)
    second = law.variance() + law.mean() ** 2
    assert (up - 2 * centre + down) / (h * h) == pytest.approx(second, rel=1e-4)


@pytest.mark.parametrize("law", DISCRETE_LAWS, ids=_ids)
def test_second_mgf_derivatives_give_factorial_moments(law: DiscreteLaw) -> None:
    """E(s^X) has first derivative E(X) and second derivative E(X(X - 1)) at s = 1."""
    h = 1e-4
    up, centre, down = second_mgf(law, 1 + h), second_mgf(law, 1.0), second_mgf(law, 1 - h)
    assert (up - down) / (2 * h) == pytest.approx(law.mean(), rel=1e-6)
    assert (up - 2 * centre + down) / (h * h) == pytest.approx(law.factorial_moment2(), rel=1e-4, abs=1e-6)


def test_closed_form_mgfs() -> None:
    """Known MGF values."""
    assert Poisson(lam=2.0).mgf(math.log(2.0)) == pytest.approx(math.exp(2.0), rel=1e-14)
    assert Geometric(p=Fraction(1, 2)).mgf(math.log(1.5)) == pytest.approx(3.0, rel=1e-14)
    assert Degenerate(c=Fraction(2)).mgf(0.5) == pytest.approx(math.e, rel=1e-15)
    assert LAZY_STUDENT.mgf(0.3) == pytest.approx(LAZY_STUDENT.mgf_by_summation(0.3), rel=1e-12)


def test_geometric_mgf_domain() -> None:
    """The geometric MGF diverges from s = -ln(1 - p) on."""
    law = Geometric(p=Fraction(1, 2))
    assert law.mgf_upper_bound() == pytest.approx(math.log(2.0))
    with pytest.raises(DomainError):
        law.mgf(law.mgf_upper_bound())
    with pytest.raises(DomainError):
        law.mgf(0.7)
    with pytest.raises(DomainError):
        NegativeBinomial(k=2, p=Fraction(1, 2)).mgf(1.0)


def test_second_mgf_needs_positive_argument() -> None:
    """E(s^X) is only defined here for s > 0."""
    with pytest.raises(DomainError):
        second_mgf(LAZY_STUDENT, 0.0)


def test_bernoulli_sample_mean() -> None:
    """The frequency of successes settles near p."""
    draws = Bernoulli(p=Fraction(3, 10)).sample(Rng(2024), 100_000)
    assert set(draws) <= {0.0, 1.0}
    assert sum(draws) / len(draws) == pytest.approx(0.3, abs=0.01)


def test_samples_stay_in_the_support() -> None:
    """Every draw is a possible value."""
    rng = Rng(11)
    for law in DISCRETE_LAWS:
        bounds = law.support()
        assert all(bounds.contains(value) for value in law.sample(rng, 500))


def test_degenerate_law() -> None:
    """A point mass always returns its value and has no spread."""
    law = Degenerate(c=Fraction(7, 2))
    assert law.sample(Rng(1), 5) == [3.5] * 5
    assert law.variance() == 0.0
    assert law.cdf(3.4) == 0.0
    assert law.cdf(3.5) == 1.0
    assert law.quantile(0.2) == 3.5
    assert law.support().kind is SupportKind.POINT
    assert law.cumulative_table() == ([3.5], [1.0])
    assert law.exact_table() == [(Fraction(7, 2), Fraction(1))]


def test_exact_table_needs_a_bounded_support() -> None:
    """Bounded laws list their exact masses and unbounded ones refuse."""
    assert Bernoulli(p=Fraction(1, 3)).exact_table() == [(Fraction(0), Fraction(2, 3)), (Fraction(1), Fraction(1, 3))]
    with pytest.raises(DomainError, match="unbounded"):
        Geometric(p=Fraction(1, 2)).exact_table()


@pytest.mark.parametrize("law", DISCRETE_LAWS, ids=_ids)
def test_samples_pass_kolmogorov_smirnov(law: DiscreteLaw) -> None:
    """Empirical and theoretical distribution functions agree on the support."""
    count = 100_000
    draws = law.sample(Rng(20240601), count)
    assert _ks_distance(law, draws) < KS_CRITICAL / math.sqrt(count)


def test_samples_are_reproducible() -> None:
    """Equal seeds give equal draws."""
    law = Poisson(lam=4.0)
    assert law.sample(Rng(99), 50) == law.sample(Rng(99), 50)


def test_sample_count_must_be_positive() -> None:
    """An empty sample is a caller error."""
    with pytest.raises(DomainError):
        LAZY_STUDENT.sample(Rng(1), 0)
