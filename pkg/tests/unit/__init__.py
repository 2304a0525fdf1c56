"""Unit test initialization for pytest."""
