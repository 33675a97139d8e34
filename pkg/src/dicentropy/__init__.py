"""Entropy of the number of distinct colours seen after rolling properly coloured dice."""

__version__ = "0.1.0"
