"""Domain-specific exception hierarchy for probkit."""

from __future__ import annotations


class ProbkitError(Exception):
    """Base class for all domain-specific errors raised by probkit."""


class ProbkitValidationError(ProbkitError):
    """Raised when inputs, configuration, or payloads fail validation rules."""


class DomainError(ProbkitValidationError):
    """Raised when an argument lies outside the domain of an operation."""


class ParameterDomainError(DomainError):
    """Raised when law, space, or partition parameters violate their invariants."""


class ZeroProbabilityError(DomainError):
    """Raised when an operation needs a positive probability and receives zero."""


class LawKindError(ProbkitValidationError):
    """Raised when a discrete-only operation meets a continuous law, or the reverse."""


class DimensionMismatchError(ProbkitValidationError):
    """Raised when sequences or matrices do not have compatible shapes."""


class NormalizationError(ProbkitValidationError):
    """Raised when probability weights do not add up to one."""


class ParseError(ProbkitValidationError):
    """Raised when a CSV or JSON payload cannot be parsed."""

    def __init__(self, message: str, *, row: int | None = None, column: int | None = None) -> None:
        location = ""
        if row is not None:
            location = f" (row {row}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + location)
        self.row = row
        self.column = column


class ResourceLimitError(ProbkitError):
    """Raised when an argument exceeds a configured resource cap."""


class NumericOverflowError(ProbkitError, OverflowError):
    """Raised when a floating-point evaluation leaves the double range."""


class ExposureError(ProbkitError):
    """Base class for errors surfaced through the command-line exposure."""


__all__ = [
    "DimensionMismatchError",
    "DomainError",
    "ExposureError",
    "LawKindError",
    "NormalizationError",
    "NumericOverflowError",
    "ParameterDomainError",
    "ParseError",
    "ProbkitError",
    "ProbkitValidationError",
    "ResourceLimitError",
    "ZeroProbabilityError",
]
