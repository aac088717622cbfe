"""Convolution of integer-valued laws and of real sequences."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Protocol, runtime_checkable

import numpy as np
from numpy.polynomial import polynomial

from probkit.core.errors import DomainError, LawKindError
from probkit.distributions import BaseLaw, ContinuousLaw, DiscreteLaw
from probkit.moments.random_variable import FiniteRv


@runtime_checkable
class IntegerMass(Protocol):
    """A mass function on the integers ``lower..upper`` (``upper`` ``None`` when unbounded)."""

    @property
    def lower(self) -> int: ...

    @property
    def upper(self) -> int | None: ...

    def mass(self, k: int) -> float: ...


class _LawMass:
    """Adapter exposing a discrete law through :class:`IntegerMass`."""

    def __init__(self, law: DiscreteLaw) -> None:
        bounds = law.support()
        if bounds.lower != int(bounds.lower):
            message = f"{law.law} is not integer valued"
            raise DomainError(message)
        self._law = law
        self._lower = int(bounds.lower)
        self._upper = None if bounds.upper is None else int(bounds.upper)

    @property
    def lower(self) -> int:
        return self._lower

    @property
    def upper(self) -> int | None:
        return self._upper

    def mass(self, k: int) -> float:
        return self._law.mass(k)


class ConvolvedMass:
    """Lazily evaluated mass function of the sum of two independent integer variables.

    Each ``c_k = sum_i a_i b_(k-i)`` runs over the feasible ``i`` only and is
    memoized.
    """

    def __init__(self, first: IntegerMass, second: IntegerMass) -> None:
        self._first = first
        self._second = second
        self._cache: dict[int, float] = {}

    @property
    def lower(self) -> int:
        return self._first.lower + self._second.lower

    @property
    def upper(self) -> int | None:
        if self._first.upper is None or self._second.upper is None:
            return None
        return self._first.upper + self._second.upper

    def mass(self, k: int) -> float:
        """Return ``P(X + Y = k)``."""
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        start = self._first.lower
        if self._second.upper is not None:
            start = max(start, k - self._second.upper)
        stop = k - self._second.lower
        if self._first.upper is not None:
            stop = min(stop, self._first.upper)
        terms = [self._first.mass(i) * self._second.mass(k - i) for i in range(start, stop + 1)]
        value = math.fsum(terms)
        self._cache[k] = value
        return value

    def masses(self, k_max: int) -> list[float]:
        """Return ``[P(X + Y = k) for k in 0..k_max]``."""
        return [self.mass(k) for k in range(k_max + 1)]


type Convolvable = BaseLaw | FiniteRv | IntegerMass


def _integer_pairs(rv: FiniteRv) -> list[tuple[int, Fraction]]:
    pairs: list[tuple[int, Fraction]] = []
    for value, weight in rv.pairs():
        if value.denominator != 1:
            message = f"Convolution needs integer values, got {value}"
            raise DomainError(message)
        pairs.append((int(value), weight))
    return pairs


def _exact_pairs(item: Convolvable) -> list[tuple[int, Fraction]] | None:
    """Return the exact integer law of *item* when it is bounded and rational."""
    if isinstance(item, FiniteRv):
        return _integer_pairs(item)
    if isinstance(item, DiscreteLaw):
        bounds = item.support()
        if bounds.upper is None:
            return None
        if bounds.lower != int(bounds.lower):
            message = f"{item.law} is not integer valued"
            raise DomainError(message)
        return [(k, item.exact_mass(k)) for k in range(int(bounds.lower), int(bounds.upper) + 1)]
    return None


def _as_integer_mass(item: Convolvable) -> IntegerMass:
    if isinstance(item, ContinuousLaw):
        message = f"{item.law} is continuous; convolution needs integer-valued laws"
        raise LawKindError(message)
    if isinstance(item, DiscreteLaw):
        return _LawMass(item)
    if isinstance(item, FiniteRv):
        return _RvMass(item)
    return item


class _RvMass:
    """Adapter exposing an integer-valued finite variable through :class:`IntegerMass`."""

    def __init__(self, rv: FiniteRv) -> None:
        self._masses = {value: float(weight) for value, weight in _integer_pairs(rv)}
        self._lower = min(self._masses)
        self._upper = max(self._masses)

    @property
    def lower(self) -> int:
        return self._lower

    @property
    def upper(self) -> int | None:
        return self._upper

    def mass(self, k: int) -> float:
        return self._masses.get(k, 0.0)


def convolve(first: Convolvable, second: Convolvable) -> FiniteRv | ConvolvedMass:
    """Return the law of the sum of two independent integer-valued variables.

    Bounded inputs with exact masses give an exact :class:`FiniteRv`; any
    unbounded input gives a lazily evaluated :class:`ConvolvedMass`.
    """
    if isinstance(first, ContinuousLaw) or isinstance(second, ContinuousLaw):
        message = "Convolution needs integer-valued laws, got a continuous one"
        raise LawKindError(message)
    left = _exact_pairs(first)
    right = _exact_pairs(second)
    if left is not None and right is not None:
        table: dict[int, Fraction] = {}
        for i, weight_i in left:
            for j, weight_j in right:
                table[i + j] = table.get(i + j, Fraction(0)) + weight_i * weight_j
        return FiniteRv.from_pairs(table.items())
    return ConvolvedMass(_as_integer_mass(first), _as_integer_mass(second))


def convolve_power(item: Convolvable, times: int) -> FiniteRv | ConvolvedMass:
    """Return the law of the sum of *times* independent copies of *item*."""
    if times < 1:
        message = f"times must be positive, got {times}"
        raise DomainError(message)
    result = convolve(item, FiniteRv.constant(0))
    for _ in range(times - 1):
        result = convolve(result, item)
    return result


def convolve_sequences(a: Sequence[float], b: Sequence[float]) -> list[float]:
    """Return ``c_n = sum_k a_k b_(n-k)`` for finite (or truncated) sequences."""
    if not a or not b:
        message = "Convolution needs nonempty sequences"
        raise DomainError(message)
    return np.convolve(np.asarray(a, dtype=float), np.asarray(b, dtype=float)).tolist()


def generating_function(seq: Sequence[float], s: float) -> float:
    """Return ``sum_k a_k s^k``."""
    return float(polynomial.polyval(s, np.asarray(seq, dtype=float)))


__all__ = [
    "ConvolvedMass",
    "IntegerMass",
    "convolve",
    "convolve_power",
    "convolve_sequences",
    "generating_function",
]
