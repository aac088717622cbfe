"""Command-line interface entry points for probkit."""

from .app import main

__all__ = ["main"]
