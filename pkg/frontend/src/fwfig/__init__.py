"""Offline figure rendering from fwlab CSV output."""

__version__ = "0.1.0"
