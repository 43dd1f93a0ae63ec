"""Exact verification toolkit for noncommutative algebra constructions."""

__version__ = "0.1.0"
