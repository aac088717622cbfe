"""Environment-driven configuration for probkit."""

from __future__ import annotations

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_DIGITS = 7
DEFAULT_MAX_FACTORIAL = 100_000
DEFAULT_MAX_ENUMERATION = 10_000_000

type LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class ProbkitSettings(BaseSettings):
    """Runtime knobs read from ``PROBKIT_*`` variables or a local ``.env`` file."""

    model_config = SettingsConfigDict(
        env_prefix="PROBKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    digits: int = Field(default=DEFAULT_DIGITS, ge=1, le=17)
    max_factorial: int = Field(default=DEFAULT_MAX_FACTORIAL, ge=1)
    max_enumeration: int = Field(default=DEFAULT_MAX_ENUMERATION, ge=1)
    log_level: LogLevel = "WARNING"


def load_settings() -> ProbkitSettings:
    """Return a fresh settings object reflecting the current environment."""
    return ProbkitSettings()


__all__ = [
    "DEFAULT_DIGITS",
    "DEFAULT_MAX_ENUMERATION",
    "DEFAULT_MAX_FACTORIAL",
    "ProbkitSettings",
    "load_settings",
]
