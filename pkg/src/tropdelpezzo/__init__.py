"""Exact tropical del Pezzo surfaces of degrees 5, 4 and 3."""

__version__ = "0.1.0"
