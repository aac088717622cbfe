"""Tests for finite random variables and their moments."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import TYPE_CHECKING

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    LawKindError,
    NormalizationError,
    NumericOverflowError,
    ParameterDomainError,
)
from probkit.couples import JointLaw
from probkit.demos import ages_rv, lazy_student_law, two_by_three_table
from probkit.distributions import Bernoulli, Binomial, Degenerate, DiscreteUniform, Hypergeometric, Normal, Poisson
from probkit.moments import (
    FiniteRv,
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

if TYPE_CHECKING:
    from probkit.distributions import DiscreteLaw


@st.composite
def finite_rvs(draw: st.DrawFn) -> FiniteRv:
    """Random variables on small integer values with rational weights."""
    values = draw(st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=8, unique=True))
    raw = draw(st.lists(st.integers(min_value=1, max_value=30), min_size=len(values), max_size=len(values)))
    total = sum(raw)
    return FiniteRv.from_pairs((value, Fraction(weight, total)) for value, weight in zip(values, raw, strict=True))


def test_ages_mean() -> None:
    """The class of 24 students has mean age 499/24."""
    assert exact_expectation(ages_rv()) == Fraction(499, 24)
    assert expectation(ages_rv()) == pytest.approx(20.7916667, abs=1e-7)


def test_ages_distribution_table() -> None:
    """The cumulative table is sorted by value and ends at one."""
    assert cumulative_table(ages_rv()) == [
        (Fraction(17), Fraction(2, 24)),
        (Fraction(19), Fraction(7, 24)),
        (Fraction(20), Fraction(14, 24)),
        (Fraction(23), Fraction(1)),
    ]


def test_construction_rules() -> None:
    """Values are distinct, weights nonnegative and exactly normalized."""
    with pytest.raises(NormalizationError):
        FiniteRv(values=(Fraction(0), Fraction(1)), probs=(Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ParameterDomainError):
        FiniteRv(values=(Fraction(1), Fraction(1)), probs=(Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ParameterDomainError):
        FiniteRv(values=(Fraction(0), Fraction(1)), probs=(Fraction(3, 2), Fraction(-1, 2)))
    with pytest.raises(DimensionMismatchError):
        FiniteRv(values=(Fraction(0),), probs=(Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ParameterDomainError):
        FiniteRv(values=(), probs=())


def test_from_pairs_merges_and_map_pushes_forward() -> None:
    """Equal values are merged, and images of X form a new law."""
    rv = FiniteRv.from_pairs([(1, Fraction(1, 4)), (-1, Fraction(1, 2)), (1, Fraction(1, 4))])
    assert rv.mass_at(1) == Fraction(1, 2)
    assert rv.mass_at(5) == 0
    squared = rv.map(lambda x: x * x)
    assert squared.pairs() == [(Fraction(1), Fraction(1))]


def test_variance_and_factorial_moment() -> None:
    """Var(X) = E(X(X - 1)) + E(X) - E(X)^2 on the ages."""
    rv = ages_rv()
    mean = exact_expectation(rv)
    assert exact_variance(rv) == exact_factorial_moment2(rv) + mean - mean * mean
    assert variance_of(rv) == pytest.approx(float(exact_variance(rv)))


@settings(derandomize=True, max_examples=1000)
@given(finite_rvs(), st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5))
def test_expectation_is_linear(rv: FiniteRv, a: int, b: int) -> None:
    """E(aX + b) = aE(X) + b and Var(aX + b) = a^2 Var(X), exactly."""
    assert exact_expectation_of_function(rv, lambda x: a * x + b) == a * exact_expectation(rv) + b
    assert exact_variance(rv.map(lambda x: a * x + b)) == a * a * exact_variance(rv)
    assert exact_variance(rv) >= 0


def test_expectation_of_function_falls_back_to_floats() -> None:
    """Non-rational images are summed in floating point."""
    rv = FiniteRv.from_pairs([(0, Fraction(1, 2)), (1, Fraction(1, 2))])
    assert expectation_of_function(rv, lambda x: math.exp(float(x))) == pytest.approx((1 + math.e) / 2)
    with pytest.raises(DomainError):
        exact_expectation_of_function(rv, lambda x: math.exp(float(x)))


def test_two_by_three_covariance_and_correlation() -> None:
    """Cov = 3/10 and rho = 0.3 / sqrt(0.14) on the reference table."""
    joint = two_by_three_table()
    assert exact_covariance(joint) == Fraction(3, 10)
    assert covariance(joint) == pytest.approx(0.3)
    assert correlation(joint) == pytest.approx(0.3 / math.sqrt(0.14), rel=1e-12)


def test_correlation_needs_spread() -> None:
    """A constant coordinate has no correlation."""
    joint = JointLaw(
        x_values=(Fraction(1),),
        y_values=(Fraction(2), Fraction(3), Fraction(4)),
        matrix=((Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)),),
    )
    with pytest.raises(DomainError):
        correlation(joint)


def test_variance_of_linear_combination() -> None:
    """a' C a, checked on a matrix and on the reference table's sum."""
    assert variance_of_linear_combination([[1.0, 0.5], [0.5, 2.0]], [1.0, 1.0]) == pytest.approx(4.0)
    joint = two_by_three_table()
    var_x = float(exact_variance(joint.marginal_x()))
    var_y = float(exact_variance(joint.marginal_y()))
    cov = covariance(joint)
    total = FiniteRv.from_pairs((x + y, weight) for x, y, weight in joint.cells())
    combined = variance_of_linear_combination([[var_x, cov], [cov, var_y]], [1.0, 1.0])
    assert combined == pytest.approx(variance_of(total), rel=1e-12)
    assert combined == pytest.approx(1.41)
    with pytest.raises(DimensionMismatchError):
        variance_of_linear_combination([[1.0, 0.0], [0.0, 1.0]], [1.0])
    with pytest.raises(DomainError):
        variance_of_linear_combination([[1.0, 0.3], [0.1, 1.0]], [1.0, 1.0])


TCHEBYCHEV_LAWS = [
    Degenerate(c=Fraction(5, 2)),
    DiscreteUniform(n=6),
    Bernoulli(p=Fraction(1, 10)),
    lazy_student_law(),
    Hypergeometric(marked=4, unmarked=6, draws=5),
]


@pytest.mark.parametrize("law", TCHEBYCHEV_LAWS, ids=lambda law: law.law)
@pytest.mark.parametrize("alpha", [0.5, 0.25, 0.05])
def test_tchebychev_interval_covers_the_law(law: DiscreteLaw, alpha: float) -> None:
    """[m - sigma/sqrt(alpha), m + sigma/sqrt(alpha)] holds at least 1 - alpha of the mass."""
    lo, hi = tchebychev_interval(law.mean(), math.sqrt(law.variance()), alpha)
    assert lo <= law.mean() <= hi
    assert law_interval_probability(law, lo, hi) >= 1 - alpha


@pytest.mark.parametrize("lam", [1.5, 2.0, 3.0])
def test_markov_bound_holds(lam: float) -> None:
    """P(X > lambda E X) <= 1/lambda for a nonnegative variable."""
    law = lazy_student_law()
    assert law.sf(lam * law.mean()) <= markov_bound(law.mean(), lam)
    assert markov_bound(law.mean(), 0.5) == 1.0


def test_inequality_arguments_are_checked() -> None:
    """Out-of-range alpha, sigma, lambda and zero means are rejected."""
    with pytest.raises(DomainError):
        tchebychev_interval(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        tchebychev_interval(0.0, -1.0, 0.5)
    with pytest.raises(DomainError):
        markov_bound(0.0, 2.0)
    with pytest.raises(DomainError):
        rvc(0.0, 1.0)
    assert rvc(-5.0, 2.0) == pytest.approx(0.4)


def test_interval_probabilities() -> None:
    """Exact interval masses for variables and bounded laws."""
    assert interval_probability(ages_rv(), 18, 21) == Fraction(12, 24)
    law = Binomial(n=3, p=Fraction(1, 2))
    assert law_interval_probability(law, 0.5, 2.5) == Fraction(3, 4)
    with pytest.raises(LawKindError):
        law_interval_probability(Normal(), -1.0, 1.0)
    with pytest.raises(DomainError):
        law_interval_probability(Poisson(lam=1.0), 0.0, 2.0)


def test_law_to_rv() -> None:
    """Bounded rational laws become exact finite variables."""
    rv = law_to_rv(Binomial(n=3, p=Fraction(1, 2)))
    assert rv.probs == (Fraction(1, 8), Fraction(3, 8), Fraction(3, 8), Fraction(1, 8))
    assert exact_expectation(rv) == Fraction(3, 2)
    with pytest.raises(DomainError):
        law_to_rv(Poisson(lam=1.0))
    with pytest.raises(LawKindError):
        law_to_rv(Normal())


def test_point_mass_off_the_integers() -> None:
    """A point mass at 5/2 carries all of its mass, whatever the interval bounds."""
    law = Degenerate(c=Fraction(5, 2))
    assert law_interval_probability(law, 2, 3) == 1
    assert law_interval_probability(law, 2.5, 2.5) == 1
    assert law_interval_probability(law, 3, 4) == 0
    assert law_interval_probability(law, -math.inf, math.inf) == 1
    rv = law_to_rv(law)
    assert rv.values == (Fraction(5, 2),)
    assert rv.probs == (Fraction(1),)


def test_infinite_interval_bounds() -> None:
    """Infinite bounds select the whole support."""
    law = Binomial(n=3, p=Fraction(1, 2))
    assert law_interval_probability(law, -math.inf, math.inf) == 1
    assert law_interval_probability(law, -math.inf, 0) == Fraction(1, 8)
    assert law_interval_probability(law, 3, math.inf) == Fraction(1, 8)


def test_finite_mgf() -> None:
    """E(exp(sX)) of finite variables, with overflow surfaced as a domain error."""
    rv = FiniteRv.from_pairs([(0, Fraction(1, 2)), (1, Fraction(1, 2))])
    assert rv_mgf(rv, 0.0) == 1.0
    assert rv_mgf(rv, 1.0) == pytest.approx((1 + math.e) / 2)
    with pytest.raises(NumericOverflowError):
        rv_mgf(FiniteRv.constant(1000), 1.0)


def test_summaries() -> None:
    """Finite summaries are exact; law summaries use closed forms."""
    summary = summarize(law_to_rv(lazy_student_law()))
    assert summary.mean == pytest.approx(5.0)
    assert summary.variance == pytest.approx(3.75)
    assert summary.std_dev == pytest.approx(math.sqrt(3.75))
    assert summary.factorial_moment2 == pytest.approx(20 * 19 / 16)
    law_summary = summarize_law(Normal(m=1.0, sd=2.0))
    assert law_summary.variance == 4.0
    assert math.isnan(law_summary.factorial_moment2)
