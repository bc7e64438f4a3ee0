"""Unit tests for jung."""
