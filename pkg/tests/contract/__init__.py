"""
Contract tests for the JSON exchange formats and golden results.

These tests pin field names and the outputs for well-known singularities.
Run with: pytest tests/contract -v
"""
