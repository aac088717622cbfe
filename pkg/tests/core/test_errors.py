"""Tests for the probkit error hierarchy and integration points."""

from __future__ import annotations

from fractions import Fraction

import pytest

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    ExposureError,
    LawKindError,
    NormalizationError,
    NumericOverflowError,
    ParameterDomainError,
    ParseError,
    ProbkitError,
    ProbkitValidationError,
    ResourceLimitError,
    ZeroProbabilityError,
)
from probkit.distributions import Binomial, Normal, mass
from probkit.finite_space import CausePartition, bayes_posterior
from probkit.interfases.cli.app import CliError
from probkit.moments import FiniteRv


def test_error_hierarchy() -> None:
    """Specialised errors should remain anchored to the ProbkitError base."""
    assert issubclass(ParameterDomainError, DomainError)
    assert issubclass(ZeroProbabilityError, DomainError)
    assert issubclass(DomainError, ProbkitValidationError)
    for error_type in (LawKindError, DimensionMismatchError, NormalizationError, ParseError):
        assert issubclass(error_type, ProbkitValidationError)
    assert issubclass(ProbkitValidationError, ProbkitError)
    assert issubclass(ResourceLimitError, ProbkitError)
    assert issubclass(NumericOverflowError, OverflowError)
    assert issubclass(ExposureError, ProbkitError)


def test_parse_error_reports_location() -> None:
    """Parse errors carry the row and column in both attributes and message."""
    error = ParseError("bad cell", row=3, column=2)
    assert error.row == 3
    assert error.column == 2
    assert str(error) == "bad cell (row 3, column 2)"
    assert str(ParseError("bad row", row=4)) == "bad row (row 4)"


def test_model_validators_raise_domain_errors_unwrapped() -> None:
    """Invariant violations escape pydantic as probkit errors, not ValidationError."""
    with pytest.raises(ParameterDomainError):
        Binomial(n=5, p=Fraction(3, 2))
    with pytest.raises(NormalizationError):
        FiniteRv(values=(Fraction(0), Fraction(1)), probs=(Fraction(1, 2), Fraction(1, 3)))


def test_law_kind_error_for_mass_of_continuous_law() -> None:
    """Discrete-only operations reject continuous laws."""
    with pytest.raises(LawKindError):
        mass(Normal(), 0)


def test_zero_evidence_raises_zero_probability_error() -> None:
    """Bayes posteriors need positive evidence."""
    partition = CausePartition(priors=(Fraction(1, 2), Fraction(1, 2)), likelihoods=(Fraction(0), Fraction(0)))
    with pytest.raises(ZeroProbabilityError):
        bayes_posterior(partition)


def test_cli_error_inherits_exposure_error() -> None:
    """The CLI should surface anticipated failures via ExposureError subclasses."""
    error = CliError("boom", exit_code=2)
    assert isinstance(error, ExposureError)
    assert error.exit_code == 2
    assert error.error_type == "CliError"
