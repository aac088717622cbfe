"""Test suite package for probkit."""
