"""Test initialization for pytest."""
