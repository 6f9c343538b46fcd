"""Exact algebra for Lie bialgebras, Manin triples, crossed modules and Courant-groupoid doubles."""

__version__ = "0.1.0"
