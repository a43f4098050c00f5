"""Exact verification of partial Hopf actions, partial smash products and duality."""

__version__ = "0.1.0"
