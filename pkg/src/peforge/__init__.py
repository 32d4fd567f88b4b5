"""Exact construction and verification of SU(n)-invariant Poincare-Einstein metrics on the ball."""

__version__ = "0.1.0"
