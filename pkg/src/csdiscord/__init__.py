"""Quantum discord for two-qubit centrosymmetric (CS) density matrices."""
__version__ = "0.1.0"
