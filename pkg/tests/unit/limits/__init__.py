"""Limits unit tests."""
