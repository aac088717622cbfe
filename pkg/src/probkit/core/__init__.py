"""Core building blocks shared by every probkit module."""

from .errors import (
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
from .rational import (
    Rational,
    RationalValue,
    Real,
    format_fraction,
    is_rational,
    to_fraction,
    weighted_sum,
)
from .settings import (
    DEFAULT_DIGITS,
    DEFAULT_MAX_ENUMERATION,
    DEFAULT_MAX_FACTORIAL,
    ProbkitSettings,
    load_settings,
)

__all__ = [
    "DEFAULT_DIGITS",
    "DEFAULT_MAX_ENUMERATION",
    "DEFAULT_MAX_FACTORIAL",
    "DimensionMismatchError",
    "DomainError",
    "ExposureError",
    "LawKindError",
    "NormalizationError",
    "NumericOverflowError",
    "ParameterDomainError",
    "ParseError",
    "ProbkitError",
    "ProbkitSettings",
    "ProbkitValidationError",
    "Rational",
    "RationalValue",
    "Real",
    "ResourceLimitError",
    "ZeroProbabilityError",
    "format_fraction",
    "is_rational",
    "load_settings",
    "to_fraction",
    "weighted_sum",
]
