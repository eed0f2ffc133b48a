"""Semiring implementations."""
