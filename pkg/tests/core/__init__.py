"""Tests covering the probkit error hierarchy."""
