"""Effective decay rates and Zeno / anti-Zeno regimes of a measured two-level system."""

__version__ = "0.1.0"
