"""Exact workbench for finite hypervector spaces and bipolar fuzzy soft sets."""

__version__ = "0.1.0"
