"""Moments unit tests."""
