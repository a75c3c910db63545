"""Symbolic braid, pure braid and monomial braid group calculus with relation checking."""

__version__ = "0.1.0"
