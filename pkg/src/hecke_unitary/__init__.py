"""Exact unitarity computations for graded affine Hecke algebras."""

__version__ = "0.1.0"
