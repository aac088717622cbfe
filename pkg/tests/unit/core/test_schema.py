"""Tests for probkit.core.schema utilities."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

import pytest
from jsonschema import Draft202012Validator

from probkit.core.errors import ParseError, ProbkitValidationError
from probkit.core.schema import (
    build_json_schema,
    build_law_json_schema,
    build_rv_json_schema,
    build_space_json_schema,
    export_schema,
    validate_payload,
)

if TYPE_CHECKING:
    from pathlib import Path


def test_schemas_are_valid_draft_2020_12() -> None:
    """Every exported schema validates against the 2020-12 metaschema."""
    for schema, title in (
        (build_law_json_schema(), "ProbkitLaw"),
        (build_space_json_schema(), "ProbkitSpace"),
        (build_rv_json_schema(), "ProbkitRandomVariable"),
    ):
        Draft202012Validator.check_schema(schema)
        assert schema["title"] == title
        assert schema["$schema"].endswith("2020-12/schema")


def test_export_schema_writes_pretty_json(tmp_path: Path) -> None:
    """Exported schema persists as formatted JSON on disk."""
    output_path = tmp_path / "law_schema.json"
    schema = export_schema("law", output_path)
    assert json.loads(output_path.read_text(encoding="utf-8")) == schema
    assert schema["$id"].endswith("law.json")


@pytest.mark.parametrize(
    "payload",
    [
        {"law": "binom", "size": 20, "prob": "1/4"},
        {"law": "hyper", "m": 4, "n": 6, "k": 3},
        {"law": "gamma", "shape": 2.0, "rate": 1.5},
        {"law": "gamma", "shape": 2.0, "scale": 0.5},
        {"law": "norm", "mean": 0, "sd": 1},
        {"law": "norm", "sigma2": 4},
        {"law": "pois", "lambda": 3},
    ],
)
def test_valid_law_payloads_pass(payload: dict[str, Any]) -> None:
    """Canonical payloads with R parameter names are accepted."""
    validate_payload("law", payload)


@pytest.mark.parametrize(
    "payload",
    [
        {"size": 20, "prob": 0.25},
        {"law": "binom", "size": 20},
        {"law": "gamma", "shape": 2.0, "rate": 1.0, "scale": 1.0},
        {"law": "norm", "sd": 1, "sigma2": 1},
        {"law": "pois", "lambda": 3, "extra": 1},
        {"law": "beta", "shape1": 1},
    ],
)
def test_invalid_law_payloads_fail(payload: dict[str, Any]) -> None:
    """Missing tags, missing parameters, conflicting or unknown keys are rejected."""
    with pytest.raises(ParseError):
        validate_payload("law", payload)


def test_space_and_rv_payloads() -> None:
    """Space and random-variable payloads are validated structurally."""
    validate_payload("space", {"outcomes": ["H", "T"], "weights": ["1/2", 0.5]})
    validate_payload("rv", {"values": [1, 2], "probs": ["1/3", "2/3"]})
    with pytest.raises(ParseError):
        validate_payload("rv", {"values": [1, 2]})


def test_unknown_schema_kind() -> None:
    """Unknown kinds are validation errors."""
    with pytest.raises(ProbkitValidationError):
        build_json_schema("joint")  # pyright: ignore[reportArgumentType]
