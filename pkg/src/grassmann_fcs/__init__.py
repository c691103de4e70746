"""Grassmann calculus and fermionic coherent-state entanglement engine."""

__version__ = "0.1.0"
