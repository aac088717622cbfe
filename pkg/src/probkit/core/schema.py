"""Utilities for exporting probkit JSON Schemas and checking payloads against them."""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from pathlib import Path
from typing import Any, Literal

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from probkit.distributions.catalog import law_json_schema
from probkit.finite_space.space import FiniteProbabilitySpace
from probkit.moments.random_variable import FiniteRv

from .errors import ParseError, ProbkitValidationError

SCHEMA_DRAFT_URL = "https://json-schema.org/draft/2020-12/schema"
SCHEMA_BASE_URL = "https://schemas.probkit.dev"

type SchemaKind = Literal["law", "space", "rv"]

_POSITIVE_NUMBER: dict[str, Any] = {"type": "number", "exclusiveMinimum": 0}


def _decorate(schema: dict[str, Any], *, title: str, name: str) -> dict[str, Any]:
    schema.setdefault("$schema", SCHEMA_DRAFT_URL)
    schema["title"] = title
    schema.setdefault("$id", f"{SCHEMA_BASE_URL}/{name}.json")
    Draft202012Validator.check_schema(schema)
    return schema


def build_law_json_schema() -> dict[str, Any]:
    """Return the JSON Schema of law payloads (``{"law": tag, ...}`` with R parameter names)."""
    schema = law_json_schema()
    schema["type"] = "object"
    schema["required"] = ["law"]

    definitions = schema.get("$defs", {})
    gamma = definitions.get("Gamma")
    if gamma is not None:
        gamma["properties"]["scale"] = dict(_POSITIVE_NUMBER, title="Scale")
        gamma["required"] = [name for name in gamma.get("required", []) if name != "rate"]
        gamma["oneOf"] = [{"required": ["rate"]}, {"required": ["scale"]}]
    normal = definitions.get("Normal")
    if normal is not None:
        normal["properties"]["sigma2"] = dict(_POSITIVE_NUMBER, title="Sigma2")
        normal["not"] = {"required": ["sd", "sigma2"]}

    return _decorate(schema, title="ProbkitLaw", name="law")


def build_space_json_schema() -> dict[str, Any]:
    """Return the JSON Schema of finite probability space payloads."""
    schema = FiniteProbabilitySpace.model_json_schema()
    return _decorate(schema, title="ProbkitSpace", name="space")


def build_rv_json_schema() -> dict[str, Any]:
    """Return the JSON Schema of finite random variable payloads."""
    schema = FiniteRv.model_json_schema()
    return _decorate(schema, title="ProbkitRandomVariable", name="rv")


SCHEMA_BUILDERS: dict[str, Callable[[], dict[str, Any]]] = {
    "law": build_law_json_schema,
    "space": build_space_json_schema,
    "rv": build_rv_json_schema,
}


def build_json_schema(kind: SchemaKind) -> dict[str, Any]:
    """Return the schema registered under *kind*."""
    try:
        builder = SCHEMA_BUILDERS[kind]
    except KeyError as error:
        message = f"Unknown schema kind {kind!r}; expected one of {', '.join(SCHEMA_BUILDERS)}"
        raise ProbkitValidationError(message) from error
    return builder()


def export_schema(kind: SchemaKind, path: Path | str) -> dict[str, Any]:
    """Write the *kind* JSON Schema to *path* and return it."""
    schema = build_json_schema(kind)
    path_obj = Path(path)
    path_obj.write_text(
        json.dumps(schema, indent=2, sort_keys=True),
        encoding="utf-8",
    )
    return schema


def validate_payload(kind: SchemaKind, payload: Mapping[str, Any]) -> None:
    """Check *payload* against the *kind* schema, reporting the first violation."""
    validator = Draft202012Validator(build_json_schema(kind))
    first = best_match(validator.iter_errors(dict(payload)))
    if first is not None:
        location = "/".join(str(part) for part in first.absolute_path) or "<root>"
        message = f"{kind} payload invalid at {location}: {first.message}"
        raise ParseError(message)


__all__ = [
    "SCHEMA_BUILDERS",
    "SCHEMA_DRAFT_URL",
    "SchemaKind",
    "build_json_schema",
    "build_law_json_schema",
    "build_rv_json_schema",
    "build_space_json_schema",
    "export_schema",
    "validate_payload",
]
