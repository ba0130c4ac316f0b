"""Finite simplicial groups, Moore complexes and crossed structures up to 3-crossed modules."""

__version__ = "0.1.0"
