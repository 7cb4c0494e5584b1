"""Exact symbolic toolkit for factorized difference operators and
q-characters of the C, B and D affine series."""

__version__ = "0.1.0"
