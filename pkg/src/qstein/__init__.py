"""Exact character values of S_n, A_n and their double covers, with an
exhaustive quasi p-Steinberg classifier."""

__version__ = "0.1.0"
