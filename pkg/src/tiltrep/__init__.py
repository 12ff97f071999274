"""Exact construction of preprojective representations of extended Dynkin quivers."""
__version__ = "0.1.0"
