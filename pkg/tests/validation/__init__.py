"""Validation tests for error messages and response quality."""

