"""Tests for sums of independent integer variables and sequence convolution."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probkit.core.errors import DomainError, LawKindError
from probkit.couples import ConvolvedMass, convolve, convolve_power, convolve_sequences, generating_function
from probkit.distributions import Bernoulli, Binomial, DiscreteUniform, Geometric, NegativeBinomial, Normal, Poisson
from probkit.moments import FiniteRv, exact_expectation

GEOMETRIC_HORIZON = 40
POISSON_HORIZON = 50


@st.composite
def open_probabilities(draw: st.DrawFn) -> Fraction:
    """Rational probabilities strictly between 0 and 1."""
    denominator = draw(st.integers(min_value=2, max_value=30))
    return Fraction(draw(st.integers(min_value=1, max_value=denominator - 1)), denominator)


@settings(derandomize=True, max_examples=1000, deadline=None)
@given(open_probabilities(), st.integers(min_value=1, max_value=12))
def test_bernoulli_sums_are_binomial(p: Fraction, n: int) -> None:
    """n Bernoulli(p) trials add up to Binomial(n, p), exactly."""
    total = convolve_power(Bernoulli(p=p), n)
    assert isinstance(total, FiniteRv)
    law = Binomial(n=n, p=p)
    assert total.values == tuple(Fraction(k) for k in range(n + 1))
    assert total.probs == tuple(law.exact_mass(k) for k in range(n + 1))


def test_two_dice() -> None:
    """The sum of two dice peaks at seven with probability 1/6."""
    total = convolve(DiscreteUniform(n=6), DiscreteUniform(n=6))
    assert isinstance(total, FiniteRv)
    assert total.mass_at(7) == Fraction(1, 6)
    assert total.mass_at(2) == Fraction(1, 36)
    assert exact_expectation(total) == 7


@settings(derandomize=True, max_examples=1000, deadline=None)
@given(open_probabilities(), st.integers(min_value=1, max_value=4))
def test_geometric_sums_are_negative_binomial(p: Fraction, k: int) -> None:
    """The rank of the k-th success is a sum of k geometric waiting times."""
    total = convolve_power(Geometric(p=p), k)
    assert isinstance(total, ConvolvedMass)
    assert total.lower == k
    assert total.upper is None
    law = NegativeBinomial(k=k, p=p)
    for j in range(GEOMETRIC_HORIZON + 1):
        assert total.mass(j) == pytest.approx(law.mass(j), abs=1e-12)


@settings(derandomize=True, max_examples=1000, deadline=None)
@given(st.floats(min_value=0.05, max_value=20.0), st.floats(min_value=0.05, max_value=20.0))
def test_poisson_sums_are_poisson(first: float, second: float) -> None:
    """Independent Poisson intensities add up."""
    total = convolve(Poisson(lam=first), Poisson(lam=second))
    assert isinstance(total, ConvolvedMass)
    law = Poisson(lam=first + second)
    assert total.masses(POISSON_HORIZON) == pytest.approx(
        [law.mass(k) for k in range(POISSON_HORIZON + 1)], abs=1e-12
    )


def test_poisson_reference_sum() -> None:
    """Poisson(1.5) plus Poisson(2) is Poisson(3.5), mass for mass."""
    total = convolve(Poisson(lam=1.5), Poisson(lam=2.0))
    assert isinstance(total, ConvolvedMass)
    law = Poisson(lam=3.5)
    assert total.masses(15) == pytest.approx([law.mass(k) for k in range(16)], rel=1e-12)


def test_mixed_finite_and_law() -> None:
    """Finite variables and laws can be added."""
    shift = FiniteRv.constant(10)
    total = convolve(shift, Bernoulli(p=Fraction(1, 4)))
    assert isinstance(total, FiniteRv)
    assert total.pairs() == [(Fraction(10), Fraction(3, 4)), (Fraction(11), Fraction(1, 4))]


def test_convolution_needs_integer_laws() -> None:
    """Continuous laws and fractional values are rejected."""
    with pytest.raises(LawKindError):
        convolve(Normal(), Bernoulli(p=Fraction(1, 2)))
    with pytest.raises(DomainError):
        convolve(FiniteRv.constant(Fraction(1, 2)), Bernoulli(p=Fraction(1, 2)))
    with pytest.raises(DomainError):
        convolve_power(Bernoulli(p=Fraction(1, 2)), 0)


def test_sequence_convolution() -> None:
    """(1 + s)^2 (1 + s) = 1 + 3s + 3s^2 + s^3."""
    assert convolve_sequences([1.0, 2.0, 1.0], [1.0, 1.0]) == [1.0, 3.0, 3.0, 1.0]
    with pytest.raises(DomainError):
        convolve_sequences([], [1.0])


def test_generating_functions_multiply() -> None:
    """The generating function of a convolution is the product of generating functions."""
    a = [0.2, 0.5, 0.3]
    b = [0.6, 0.4]
    c = convolve_sequences(a, b)
    for s in (-1.0, 0.3, 0.9, 2.0):
        assert generating_function(c, s) == pytest.approx(generating_function(a, s) * generating_function(b, s))
    assert generating_function([math.e], 5.0) == pytest.approx(math.e)
