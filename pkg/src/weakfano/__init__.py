"""Weak Fano blowups of a smooth quadric threefold along a smooth curve."""
__version__ = "0.1.0"
