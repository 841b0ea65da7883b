"""Exact symbolic arithmetic used by the valuations."""

from .poly import LinearForm, Polynomial
from .linden import LinDenRat, divide_by_linear, linden_add, linden_sum, substitute_equal
from .geom import GeomRat, QRat, divide_one_minus_monomial, geom_add, geom_sum, q_specialize
from .residue import bernoulli, total_residue

__all__ = [
    "Polynomial", "LinearForm", "LinDenRat", "GeomRat", "QRat",
    "divide_by_linear", "linden_add", "linden_sum", "substitute_equal",
    "divide_one_minus_monomial", "geom_add", "geom_sum", "q_specialize",
    "bernoulli", "total_residue",
]
