"""Finite space unit tests."""
