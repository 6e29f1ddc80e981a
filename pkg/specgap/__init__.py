"""Verification lab for quartic graphs of minimum algebraic connectivity."""

__version__ = "0.1.0"
