"""Tests for the CLI exposure layer."""
