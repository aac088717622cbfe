"""Joint laws of discrete pairs: marginals, conditional laws, independence and joint MGFs."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator, Sequence
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from probkit.core.errors import (
    DimensionMismatchError,
    DomainError,
    NormalizationError,
    NumericOverflowError,
    ParameterDomainError,
    ZeroProbabilityError,
)
from probkit.core.rational import RationalValue, Real, is_rational, to_fraction
from probkit.moments.random_variable import FiniteRv, rv_mgf

DIAGONAL_POINTS = (-1.0, 0.5, 1.0)
FACTORIZATION_TOLERANCE = 1e-12


def _strictly_increasing(values: Sequence[Fraction]) -> bool:
    return all(left < right for left, right in zip(values, values[1:], strict=False))


class JointLaw(BaseModel):
    """Exact joint probabilities ``p[i][j] = P(X = x_i, Y = y_j)`` on the extended grid."""

    model_config = ConfigDict(frozen=True)

    x_values: tuple[RationalValue, ...]
    y_values: tuple[RationalValue, ...]
    matrix: tuple[tuple[RationalValue, ...], ...]

    @model_validator(mode="after")
    def _validate_table(self) -> JointLaw:
        if not self.x_values or not self.y_values:
            message = "A joint law needs at least one X value and one Y value"
            raise ParameterDomainError(message)
        if len(self.matrix) != len(self.x_values):
            message = f"{len(self.matrix)} rows for {len(self.x_values)} X values"
            raise DimensionMismatchError(message)
        for index, row in enumerate(self.matrix):
            if len(row) != len(self.y_values):
                message = f"Row {index} has {len(row)} cells for {len(self.y_values)} Y values"
                raise DimensionMismatchError(message)
        if not _strictly_increasing(self.x_values) or not _strictly_increasing(self.y_values):
            message = "X and Y values must be strictly increasing"
            raise ParameterDomainError(message)
        if any(cell < 0 for row in self.matrix for cell in row):
            message = "Joint probabilities must be nonnegative"
            raise ParameterDomainError(message)
        total = sum((cell for row in self.matrix for cell in row), Fraction(0))
        if total != 1:
            message = f"Joint probabilities must add up to exactly 1, got {total}"
            raise NormalizationError(message)
        return self

    @property
    def shape(self) -> tuple[int, int]:
        """Number of X values and of Y values."""
        return len(self.x_values), len(self.y_values)

    def cells(self) -> Iterator[tuple[Fraction, Fraction, Fraction]]:
        """Yield ``(x_i, y_j, p_ij)`` for every cell of the grid."""
        for x, row in zip(self.x_values, self.matrix, strict=True):
            for y, cell in zip(self.y_values, row, strict=True):
                yield x, y, cell

    def row_masses(self) -> tuple[Fraction, ...]:
        """Return ``p_i. = P(X = x_i)``."""
        return tuple(sum(row, Fraction(0)) for row in self.matrix)

    def column_masses(self) -> tuple[Fraction, ...]:
        """Return ``p_.j = P(Y = y_j)``."""
        return tuple(sum((row[j] for row in self.matrix), Fraction(0)) for j in range(len(self.y_values)))

    def marginal_x(self) -> FiniteRv:
        """Return the law of ``X``."""
        return FiniteRv(values=self.x_values, probs=self.row_masses())

    def marginal_y(self) -> FiniteRv:
        """Return the law of ``Y``."""
        return FiniteRv(values=self.y_values, probs=self.column_masses())

    def y_index(self, y: Real) -> int:
        """Return the column index of the value *y*."""
        target = to_fraction(y)
        try:
            return self.y_values.index(target)
        except ValueError as error:
            message = f"{y} is not a value of Y"
            raise DomainError(message) from error


type PairedRv = JointLaw
"""A real function of a couple is handled through the couple's joint law."""


class ConditionalLaw(BaseModel):
    """Law of ``X`` given ``Y = y_j``: ``p_i^(j) = p_ij / p_.j``."""

    model_config = ConfigDict(frozen=True)

    given_y_index: int
    x_values: tuple[RationalValue, ...]
    probs: tuple[RationalValue, ...]

    def as_rv(self) -> FiniteRv:
        """Return the conditional law as a finite random variable."""
        return FiniteRv(values=self.x_values, probs=self.probs)


def product_joint(x_rv: FiniteRv, y_rv: FiniteRv) -> JointLaw:
    """Return the joint law of independent ``X`` and ``Y``."""
    x_pairs = sorted(x_rv.pairs())
    y_pairs = sorted(y_rv.pairs())
    return JointLaw(
        x_values=tuple(x for x, _ in x_pairs),
        y_values=tuple(y for y, _ in y_pairs),
        matrix=tuple(tuple(px * py for _, py in y_pairs) for _, px in x_pairs),
    )


def joint_from_pairs(cells: Iterable[tuple[Real, Real, Real]]) -> JointLaw:
    """Build a joint law from ``(x, y, p)`` triples, filling absent cells with zeros."""
    table: dict[tuple[Fraction, Fraction], Fraction] = {}
    for x, y, weight in cells:
        key = (to_fraction(x), to_fraction(y))
        table[key] = table.get(key, Fraction(0)) + to_fraction(weight)
    x_values = tuple(sorted({x for x, _ in table}))
    y_values = tuple(sorted({y for _, y in table}))
    return JointLaw(
        x_values=x_values,
        y_values=y_values,
        matrix=tuple(tuple(table.get((x, y), Fraction(0)) for y in y_values) for x in x_values),
    )


def marginal_x(joint: JointLaw) -> FiniteRv:
    """Return the law of ``X`` obtained by summing rows."""
    return joint.marginal_x()


def marginal_y(joint: JointLaw) -> FiniteRv:
    """Return the law of ``Y`` obtained by summing columns."""
    return joint.marginal_y()


def _column_mass(joint: JointLaw, given_y_index: int) -> Fraction:
    if not 0 <= given_y_index < len(joint.y_values):
        message = f"Column index {given_y_index} outside 0..{len(joint.y_values) - 1}"
        raise DomainError(message)
    column = joint.column_masses()[given_y_index]
    if column == 0:
        message = f"P(Y = {joint.y_values[given_y_index]}) is zero; the conditional law is undefined"
        raise ZeroProbabilityError(message)
    return column


def conditional_law(joint: JointLaw, given_y_index: int) -> ConditionalLaw:
    """Return the law of ``X`` given ``Y = y_j``."""
    column = _column_mass(joint, given_y_index)
    return ConditionalLaw(
        given_y_index=given_y_index,
        x_values=joint.x_values,
        probs=tuple(row[given_y_index] / column for row in joint.matrix),
    )


def _mean_of(terms: Iterable[tuple[Real, Fraction]]) -> Fraction | float:
    items = list(terms)
    if all(is_rational(value) for value, _ in items):
        return sum((Fraction(value) * weight for value, weight in items), Fraction(0))
    return math.fsum(float(value) * float(weight) for value, weight in items)


def _conditional_mean(joint: JointLaw, h: Callable[[Fraction], Real], given_y_index: int) -> Fraction | float:
    law = conditional_law(joint, given_y_index)
    return _mean_of((h(x), weight) for x, weight in zip(law.x_values, law.probs, strict=True))


def conditional_expectation(joint: JointLaw, h: Callable[[Fraction], Real], given_y_index: int) -> float:
    """Return ``E(h(X) | Y = y_j) = sum_i h(x_i) p_i^(j)``."""
    return float(_conditional_mean(joint, h, given_y_index))


def _tower(joint: JointLaw, h: Callable[[Fraction], Real]) -> Fraction | float:
    terms: list[tuple[Real, Fraction]] = [
        (_conditional_mean(joint, h, j), column)
        for j, column in enumerate(joint.column_masses())
        if column > 0
    ]
    return _mean_of(terms)


def tower_expectation(joint: JointLaw, h: Callable[[Fraction], Real]) -> float:
    """Return ``sum_j P(Y = y_j) E(h(X) | Y = y_j)``, skipping null columns; equals ``E(h(X))``."""
    return float(_tower(joint, h))


def exact_tower_expectation(joint: JointLaw, h: Callable[[Fraction], Real]) -> Fraction:
    """Return the tower expectation exactly; *h* must map rationals to rationals."""
    value = _tower(joint, h)
    if not isinstance(value, Fraction):
        message = "h produced non-rational values"
        raise DomainError(message)
    return value


def is_independent(joint: JointLaw) -> bool:
    """Return whether ``p_ij = p_i. p_.j`` holds for every cell, compared exactly."""
    rows = joint.row_masses()
    columns = joint.column_masses()
    return all(
        joint.matrix[i][j] == rows[i] * columns[j] for i in range(len(rows)) for j in range(len(columns))
    )


def joint_mgf(joint: JointLaw, s: float, t: float) -> float:
    """Return ``E(exp(sX + tY))``."""
    try:
        terms = [float(weight) * math.exp(s * float(x) + t * float(y)) for x, y, weight in joint.cells()]
    except OverflowError as error:
        message = f"Joint moment generating function overflows at (s, t) = ({s}, {t})"
        raise NumericOverflowError(message) from error
    total = math.fsum(terms)
    if not math.isfinite(total):
        message = f"Joint moment generating function overflows at (s, t) = ({s}, {t})"
        raise NumericOverflowError(message)
    return total


def diagonal_mgf_factorizes(
    joint: JointLaw,
    points: Sequence[float] = DIAGONAL_POINTS,
    tol: float = FACTORIZATION_TOLERANCE,
) -> bool:
    """Return whether ``Phi_XY(s, s) = Phi_X(s) Phi_Y(s)`` at every point, relative to *tol*."""
    x_rv, y_rv = joint.marginal_x(), joint.marginal_y()
    for s in points:
        joint_value = joint_mgf(joint, s, s)
        product = rv_mgf(x_rv, s) * rv_mgf(y_rv, s)
        if abs(joint_value - product) > tol * max(1.0, abs(product)):
            return False
    return True


__all__ = [
    "DIAGONAL_POINTS",
    "FACTORIZATION_TOLERANCE",
    "ConditionalLaw",
    "JointLaw",
    "PairedRv",
    "conditional_expectation",
    "conditional_law",
    "diagonal_mgf_factorizes",
    "exact_tower_expectation",
    "is_independent",
    "joint_from_pairs",
    "joint_mgf",
    "marginal_x",
    "marginal_y",
    "product_joint",
    "tower_expectation",
]
