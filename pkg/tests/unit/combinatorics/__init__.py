"""Combinatorics unit tests."""
