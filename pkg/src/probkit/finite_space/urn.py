"""Exhaustive urn enumeration: ordered draws aggregated by marked-ball count."""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from fractions import Fraction

from probkit.core.errors import ParameterDomainError, ResourceLimitError
from probkit.core.settings import load_settings

from .space import FiniteProbabilitySpace

logger = logging.getLogger(__name__)


def urn_draw_space(
    total: int,
    marked: int,
    draws: int,
    *,
    with_replacement: bool,
    max_enumeration: int | None = None,
) -> FiniteProbabilitySpace:
    """Return the law of the number of marked balls among *draws* ordered draws.

    Every ordered draw sequence is enumerated as an equiprobable outcome.
    The outcomes of the returned space are the counts ``0..draws``.
    Without an explicit *max_enumeration* the cap comes from ``PROBKIT_MAX_ENUMERATION``.
    """
    if total < 1 or draws < 1:
        message = f"total and draws must be positive, got total={total}, draws={draws}"
        raise ParameterDomainError(message)
    if not 0 <= marked <= total:
        message = f"marked must lie in 0..{total}, got {marked}"
        raise ParameterDomainError(message)
    if not with_replacement and draws > total:
        message = f"Cannot draw {draws} balls without replacement from {total}"
        raise ParameterDomainError(message)

    cap = load_settings().max_enumeration if max_enumeration is None else max_enumeration
    sequence_count = total**draws if with_replacement else math.perm(total, draws)
    if sequence_count > cap:
        message = f"Urn enumeration needs {sequence_count} sequences, above the cap {cap}"
        raise ResourceLimitError(message)
    logger.debug(
        "Enumerating urn draws",
        extra={"total": total, "marked": marked, "draws": draws, "sequences": sequence_count},
    )

    balls = range(total)
    sequences = (
        itertools.product(balls, repeat=draws) if with_replacement else itertools.permutations(balls, draws)
    )
    counts = Counter(sum(ball < marked for ball in sequence) for sequence in sequences)
    weights = tuple(Fraction(counts.get(hits, 0), sequence_count) for hits in range(draws + 1))
    return FiniteProbabilitySpace(outcomes=tuple(range(draws + 1)), weights=weights)


__all__ = ["urn_draw_space"]
