"""Weights, entanglement analysis and the boson/fermion comparison."""
