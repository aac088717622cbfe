"""Reading and writing joint probability tables as CSV."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from probkit.core.errors import NormalizationError, ParseError
from probkit.core.rational import format_fraction, to_fraction

from .joint import JointLaw

logger = logging.getLogger(__name__)

DECIMAL_TOLERANCE = Fraction(1, 10**9)
MIN_ROWS = 2
MIN_COLUMNS = 2
CORNER_LABEL = "X\\Y"


@dataclass(frozen=True)
class JointCsvResult:
    """A parsed joint table and whether decimal rounding forced a renormalization."""

    joint: JointLaw
    renormalized: bool


def _cell(text: str, *, row: int, column: int) -> Fraction:
    try:
        return to_fraction(text)
    except ParseError as error:
        message = f"Cannot read {text.strip()!r} as a number"
        raise ParseError(message, row=row, column=column) from error


def parse_joint_csv(content: str) -> JointCsvResult:
    """Parse a joint table whose header is ``X\\Y, y_1, ..., y_m``.

    Tables written with ``num/den`` cells must add up to exactly 1. Tables
    written only with decimals may miss 1 by at most ``1e-9``; they are then
    rescaled and flagged.
    """
    rows = [row for row in csv.reader(io.StringIO(content)) if any(cell.strip() for cell in row)]
    if len(rows) < MIN_ROWS:
        message = "A joint table needs a header row and at least one data row"
        raise ParseError(message, row=len(rows) + 1)
    header, *body = rows
    if len(header) < MIN_COLUMNS:
        message = "The header must list at least one Y value"
        raise ParseError(message, row=1)
    y_values = tuple(_cell(text, row=1, column=column) for column, text in enumerate(header[1:], start=2))

    x_values: list[Fraction] = []
    matrix: list[tuple[Fraction, ...]] = []
    exact_notation = False
    for row_number, row in enumerate(body, start=2):
        if len(row) != len(header):
            message = f"Expected {len(header)} cells, found {len(row)}"
            raise ParseError(message, row=row_number)
        x_values.append(_cell(row[0], row=row_number, column=1))
        matrix.append(
            tuple(_cell(text, row=row_number, column=column) for column, text in enumerate(row[1:], start=2)),
        )
        exact_notation = exact_notation or any("/" in text for text in row[1:])

    total = sum((cell for row in matrix for cell in row), Fraction(0))
    renormalized = False
    if total != 1:
        if exact_notation or abs(total - 1) > DECIMAL_TOLERANCE:
            message = f"Joint probabilities add up to {float(total):.12g}, not 1"
            raise NormalizationError(message)
        logger.warning(
            "Renormalizing a decimal joint table",
            extra={"total": float(total), "deviation": float(total - 1)},
        )
        matrix = [tuple(cell / total for cell in row) for row in matrix]
        renormalized = True

    joint = JointLaw(x_values=tuple(x_values), y_values=y_values, matrix=tuple(matrix))
    return JointCsvResult(joint=joint, renormalized=renormalized)


def read_joint_csv(path: Path | str) -> JointCsvResult:
    """Read and parse the joint table stored at *path*."""
    return parse_joint_csv(Path(path).read_text(encoding="utf-8"))


def format_joint_csv(joint: JointLaw) -> str:
    """Render *joint* in the CSV table format with exact ``num/den`` cells."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([CORNER_LABEL, *(format_fraction(y) for y in joint.y_values)])
    for x, row in zip(joint.x_values, joint.matrix, strict=True):
        writer.writerow([format_fraction(x), *(format_fraction(cell) for cell in row)])
    return buffer.getvalue()


def write_joint_csv(joint: JointLaw, path: Path | str) -> None:
    """Write *joint* to *path*."""
    Path(path).write_text(format_joint_csv(joint), encoding="utf-8")


__all__ = [
    "CORNER_LABEL",
    "DECIMAL_TOLERANCE",
    "JointCsvResult",
    "format_joint_csv",
    "parse_joint_csv",
    "read_joint_csv",
    "write_joint_csv",
]
