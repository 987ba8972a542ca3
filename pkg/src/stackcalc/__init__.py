"""Exact symbolic calculus for multiplicative structures on Lie groupoids."""

__version__ = "0.1.0"
