"""Desk-scale toolkit for the ternary Goldbach problem in arithmetic progressions."""

__version__ = "0.1.0"
