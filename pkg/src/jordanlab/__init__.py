"""Exact-arithmetic checks of dimension and character conjectures for free Jordan algebras."""

__version__ = "0.1.0"
