"""Exact operadic calculus for shifted Poisson structures on semi-free cdgas."""

__version__ = "0.1.0"
