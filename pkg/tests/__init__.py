"""Tests for jung."""
