"""Generalised Renner monoids, their generic Hecke algebras, and a finite-field oracle."""

from .coxeter import CoxeterGraph, CoxeterGroup, build_group
from .renner import CrossSectionLattice, RennerData, RennerElement, RennerMonoid, validate_data
from .catalog import RookElement, group_data, rook_data, to_matrix
from .hecke import HeckeAlgebra, HeckeElement
from .poly import IntPolynomial

__all__ = [
    "CoxeterGraph", "CoxeterGroup", "build_group",
    "CrossSectionLattice", "RennerData", "RennerElement", "RennerMonoid", "validate_data",
    "RookElement", "group_data", "rook_data", "to_matrix",
    "HeckeAlgebra", "HeckeElement", "IntPolynomial",
]

__version__ = "0.1.0"
