"""Exact-rational certification of the split Cayley algebra, its derivation
algebra, and the embedding of that algebra into so(3,4)."""

__version__ = "0.1.0"
