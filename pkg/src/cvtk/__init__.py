"""Exact SL(2,C) character variety toolkit for the two-bridge knots J(2n,2n)."""

__version__ = "0.1.0"
