"""Numerical verification of current-algebra identities."""
__version__ = "0.1.0"
