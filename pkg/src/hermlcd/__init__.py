"""Quaternary Hermitian LCD codes: certification, constructions, and exhaustive checks."""

__version__ = "0.1.0"
