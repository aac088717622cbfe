"""Core package for the probkit project."""

from .core.errors import ProbkitError
from .couples import JointLaw
from .distributions import (
    Bernoulli,
    Binomial,
    Degenerate,
    DiscreteUniform,
    Exponential,
    Gamma,
    Geometric,
    Hypergeometric,
    Law,
    NegativeBinomial,
    Normal,
    NumFailures,
    Poisson,
    Rng,
    Uniform,
)
from .finite_space import CausePartition, Event, FiniteProbabilitySpace
from .moments import FiniteRv

__all__ = [
    "Bernoulli",
    "Binomial",
    "CausePartition",
    "Degenerate",
    "DiscreteUniform",
    "Event",
    "Exponential",
    "FiniteProbabilitySpace",
    "FiniteRv",
    "Gamma",
    "Geometric",
    "Hypergeometric",
    "JointLaw",
    "Law",
    "NegativeBinomial",
    "Normal",
    "NumFailures",
    "Poisson",
    "ProbkitError",
    "Rng",
    "Uniform",
]
