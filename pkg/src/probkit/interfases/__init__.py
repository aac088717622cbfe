"""Exposed interfaces for the probkit project."""

from . import cli

__all__ = ["cli"]
