"""Exact counting functions: factorials, arrangements, combinations, multinomials."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from typing import TYPE_CHECKING

from probkit.core.errors import DomainError, NumericOverflowError, ResourceLimitError
from probkit.core.settings import DEFAULT_MAX_FACTORIAL

if TYPE_CHECKING:
    from collections.abc import Iterable

type ExactCount = int
"""Arbitrary-precision nonnegative integer returned by every counting operation."""


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        message = f"{name} must be a nonnegative integer, got {value}"
        raise DomainError(message)


def factorial(n: int, *, limit: int = DEFAULT_MAX_FACTORIAL) -> ExactCount:
    """Return ``n!`` as an exact integer, with ``0! = 1``."""
    _require_nonnegative("n", n)
    if n > limit:
        message = f"factorial argument {n} exceeds the configured maximum {limit}"
        raise ResourceLimitError(message)
    return math.factorial(n)


def arrangements(n: int, p: int) -> ExactCount:
    """Return ``A_n^p = n(n-1)...(n-p+1)``, which is ``0`` when ``p > n``."""
    _require_nonnegative("n", n)
    _require_nonnegative("p", p)
    return math.perm(n, p)


def count_injections(p: int, n: int) -> ExactCount:
    """Return the number of injections from a p-set into an n-set."""
    return arrangements(n, p)


def count_maps(p: int, n: int) -> ExactCount:
    """Return the number of maps from a p-set into an n-set, ``n**p`` (``0**0 = 1``)."""
    _require_nonnegative("p", p)
    _require_nonnegative("n", n)
    return n**p


def combinations(n: int, p: int) -> ExactCount:
    """Return the binomial coefficient ``C(n, p)``, which is ``0`` when ``p > n``."""
    _require_nonnegative("n", n)
    _require_nonnegative("p", p)
    return math.comb(n, p)


def pascal_row(n: int) -> list[ExactCount]:
    """Return ``[C(n,0), ..., C(n,n)]`` built only from the Pascal recurrence."""
    _require_nonnegative("n", n)
    row = [1]
    for _ in range(n):
        row = [1, *(left + right for left, right in zip(row, row[1:], strict=False)), 1]
    return row


def multinomial(parts: Sequence[int]) -> ExactCount:
    """Return ``(sum parts)! / prod(parts_i!)``, the count of permutations with repetition."""
    if not parts:
        message = "multinomial needs at least one block"
        raise DomainError(message)
    total = 0
    count = 1
    for part in parts:
        _require_nonnegative("part", part)
        total += part
        count *= math.comb(total, part)
    return count


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-tuple of nonnegative integers adding up to *n*."""
    _require_nonnegative("n", n)
    if k < 1:
        message = f"k must be positive, got {k}"
        raise DomainError(message)
    if k == 1:
        yield (n,)
        return
    for head in range(n, -1, -1):
        for tail in compositions(n - head, k - 1):
            yield (head, *tail)


def _checked_sum(terms: Iterable[float]) -> float:
    try:
        total = math.fsum(terms)
    except OverflowError as error:
        message = "intermediate value exceeds the double range"
        raise NumericOverflowError(message) from error
    if not math.isfinite(total):
        message = "result exceeds the double range"
        raise NumericOverflowError(message)
    return total


def binomial_theorem_eval(a: float, b: float, n: int) -> float:
    """Evaluate Newton's expansion ``sum_p C(n,p) a^p b^(n-p)``."""
    _require_nonnegative("n", n)

    def _terms() -> Iterator[float]:
        for p in range(n + 1):
            try:
                yield math.comb(n, p) * a**p * b ** (n - p)
            except OverflowError as error:
                message = f"term p={p} of the binomial expansion overflows"
                raise NumericOverflowError(message) from error

    return _checked_sum(_terms())


def multinomial_theorem_eval(weights: Sequence[float], n: int) -> float:
    """Evaluate ``sum over compositions of multinomial(parts) * prod a_i^(n_i)``."""
    _require_nonnegative("n", n)
    if not weights:
        message = "multinomial expansion needs at least one weight"
        raise DomainError(message)

    def _terms() -> Iterator[float]:
        for parts in compositions(n, len(weights)):
            try:
                term = float(multinomial(parts))
                for weight, exponent in zip(weights, parts, strict=True):
                    term *= weight**exponent
            except OverflowError as error:
                message = f"term {parts} of the multinomial expansion overflows"
                raise NumericOverflowError(message) from error
            yield term

    return _checked_sum(_terms())


__all__ = [
    "ExactCount",
    "arrangements",
    "binomial_theorem_eval",
    "combinations",
    "compositions",
    "count_injections",
    "count_maps",
    "factorial",
    "multinomial",
    "multinomial_theorem_eval",
    "pascal_row",
]
