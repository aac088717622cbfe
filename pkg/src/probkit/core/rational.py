"""Exact rational coercion shared by spaces, random variables, and laws."""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction
from typing import Annotated

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

from .errors import ParseError

type Rational = Fraction | int
type Real = float | Fraction | int


def to_fraction(value: object) -> Fraction:
    """Convert *value* to an exact :class:`Fraction`.

    Floats go through their shortest decimal representation so that ``0.1``
    becomes ``1/10`` rather than its binary expansion. Strings may be
    ``"num/den"`` or any decimal literal.
    """
    if isinstance(value, bool):
        message = f"Booleans are not probabilities: {value!r}"
        raise ParseError(message)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            message = f"Non-finite value cannot be made exact: {value!r}"
            raise ParseError(message)
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            message = f"Not a rational literal: {value!r}"
            raise ParseError(message) from error
    message = f"Unsupported rational value: {value!r}"
    raise ParseError(message)


def format_fraction(value: Fraction) -> str:
    """Render *value* as ``num/den`` (or a bare integer)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_rational(value: object) -> bool:
    """Return whether *value* takes part in exact arithmetic."""
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def weighted_sum(terms: Iterable[tuple[Real, Fraction]]) -> float:
    """Return Σ value·weight, exactly when every value is rational.

    Exact sums are rounded once at the end, so equal exact results always
    produce equal floats.
    """
    items = list(terms)
    if all(is_rational(value) for value, _ in items):
        exact = sum((Fraction(value) * weight for value, weight in items), Fraction(0))
        return float(exact)
    return math.fsum(float(value) * float(weight) for value, weight in items)


_RATIONAL_JSON_SCHEMA = {
    "anyOf": [
        {"type": "number"},
        {"type": "string", "pattern": r"^\s*[-+]?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?(\s*/\s*\d+)?\s*$"},
    ],
}

RationalValue = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(format_fraction, return_type=str, when_used="json"),
    WithJsonSchema(_RATIONAL_JSON_SCHEMA),
]
"""Pydantic field type holding an exact rational."""


__all__ = [
    "Rational",
    "RationalValue",
    "Real",
    "format_fraction",
    "is_rational",
    "to_fraction",
    "weighted_sum",
]
