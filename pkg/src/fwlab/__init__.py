"""Simulation laboratory for the periodic Fornberg-Whitham equation."""

from fwlab.kernels import BACKEND

__all__ = ["BACKEND"]
__version__ = "0.1.0"
