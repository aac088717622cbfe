"""Distributions unit tests."""
