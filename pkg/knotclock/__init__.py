"""Kauffman state lattices, clock transpositions and clock numbers of knot diagrams."""

__version__ = "0.1.0"
