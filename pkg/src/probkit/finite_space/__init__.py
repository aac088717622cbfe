"""Finite probability spaces, conditioning, Bayes and independence."""

from .bayes import CausePartition, bayes_posterior, posterior_odds, total_probability
from .independence import IndependenceReport, independence_report
from .space import (
    Event,
    FiniteProbabilitySpace,
    chain_rule,
    conditional_prob,
    equiprobable_space,
    prob,
    product_space,
    push_forward,
    space_from_json,
    space_to_json,
    uniform_space,
)
from .urn import urn_draw_space

__all__ = [
    "CausePartition",
    "Event",
    "FiniteProbabilitySpace",
    "IndependenceReport",
    "bayes_posterior",
    "chain_rule",
    "conditional_prob",
    "equiprobable_space",
    "independence_report",
    "posterior_odds",
    "prob",
    "product_space",
    "push_forward",
    "space_from_json",
    "space_to_json",
    "total_probability",
    "uniform_space",
    "urn_draw_space",
]
