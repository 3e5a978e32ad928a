"""Exact verification of Chern class and Chern number inequalities."""

__version__ = "0.1.0"
