"""Exact computation and congruence checking for trinomial coefficients."""

__version__ = "0.1.0"
