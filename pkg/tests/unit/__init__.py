"""Unit test package for probkit."""
