"""Exact verification toolkit for the type-C quantum K-ring presentation."""

__version__ = "0.1.0"
