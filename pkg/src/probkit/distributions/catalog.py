"""The law catalog: tagged union, R-style names and JSON payloads."""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Annotated, Any

from pydantic import Field, TypeAdapter

from probkit.core.errors import ParseError

from .continuous import Exponential, Gamma, Normal, Uniform
from .discrete import (
    Bernoulli,
    Binomial,
    Degenerate,
    DiscreteUniform,
    Geometric,
    Hypergeometric,
    NegativeBinomial,
    NumFailures,
    Poisson,
)

Law = Annotated[
    Degenerate
    | DiscreteUniform
    | Bernoulli
    | Binomial
    | Hypergeometric
    | Geometric
    | NumFailures
    | NegativeBinomial
    | Poisson
    | Uniform
    | Exponential
    | Gamma
    | Normal,
    Field(discriminator="law"),
]

LAW_TYPES: dict[str, type[Any]] = {
    "degen": Degenerate,
    "dunif": DiscreteUniform,
    "bern": Bernoulli,
    "binom": Binomial,
    "hyper": Hypergeometric,
    "geom": Geometric,
    "nfail": NumFailures,
    "nbinom": NegativeBinomial,
    "pois": Poisson,
    "unif": Uniform,
    "exp": Exponential,
    "gamma": Gamma,
    "norm": Normal,
}
"""Law classes keyed by their payload tag."""

CLI_LAW_PARAMETERS: dict[str, tuple[str, ...]] = {
    "bern": ("prob",),
    "dunif": ("n",),
    "binom": ("size", "prob"),
    "geom": ("prob",),
    "nfail": ("prob",),
    "nbinom": ("size", "prob"),
    "hyper": ("m", "n", "k"),
    "pois": ("lambda",),
    "unif": ("min", "max"),
    "exp": ("rate",),
    "gamma": ("shape", "rate", "scale"),
    "norm": ("mean", "sd"),
}
"""Parameter names of the command-line laws, following R's naming."""

LAW_ADAPTER: TypeAdapter[Law] = TypeAdapter(Law)


def law_from_payload(payload: Mapping[str, Any]) -> Law:
    """Build a law from ``{"law": tag, <R parameter names>...}``."""
    return LAW_ADAPTER.validate_python(dict(payload))


def law_from_json(text: str) -> Law:
    """Parse a law payload from JSON text."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as error:
        message = f"Invalid law JSON: {error.msg}"
        raise ParseError(message, row=error.lineno, column=error.colno) from error
    if not isinstance(payload, dict):
        message = "A law payload must be a JSON object"
        raise ParseError(message)
    return law_from_payload(payload)


def law_to_payload(law: Law) -> dict[str, Any]:
    """Return the JSON-ready payload of *law* with R parameter names."""
    return LAW_ADAPTER.dump_python(law, mode="json", by_alias=True)


def law_json_schema() -> dict[str, Any]:
    """Return the JSON Schema of law payloads."""
    return LAW_ADAPTER.json_schema(by_alias=True)


__all__ = [
    "CLI_LAW_PARAMETERS",
    "LAW_ADAPTER",
    "LAW_TYPES",
    "Law",
    "law_from_json",
    "law_from_payload",
    "law_json_schema",
    "law_to_payload",
]
