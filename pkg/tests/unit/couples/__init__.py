"""Couples unit tests."""
