"""Exact intersection lattices and nice / supersolvable / inductively factored
decisions for complex hyperplane arrangements."""

from .arrangement import (
    Arrangement, Flat, Hyperplane, IntersectionLattice, NotAFlat,
    build_lattice, char_poly, localization, product, rank_of_subset,
    restriction, triple,
)
from .exactfield import CycNum, CycMatrix, cyclotomic_poly
from .polynomial import IntPoly, integer_root_multiset

__version__ = "0.1.0"
