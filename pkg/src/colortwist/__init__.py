"""Exact cocycle twisting of color Lie algebras over finitely generated abelian groups."""

from .bichar import (
    Bicharacter,
    Cocycle2,
    antisymmetrize,
    chi0,
    is_alternating,
    is_symmetric,
    parity,
    twist_character,
)
from .colorlie import (
    ColorLieAlgebra,
    GradedBasis,
    check_antisymmetry,
    check_color_jacobi,
    check_super,
    gl_chi,
    twist_algebra,
)
from .cyclo import CycloNumber, cyclotomic_polynomial, embed_scalar
from .fgabgroup import GroupElement, GroupPresentation, cyclic_intersection, smith_normal_form
from .scalar import MINUS_ONE, ONE, RootScalar, canonical_root, root_of_unity, solve_root_constraints, symbol
from .scheunert import construct_sigma, reduce_to_alternating, scheunert_certificate

__version__ = "0.1.0"

__all__ = [
    "Bicharacter", "Cocycle2", "antisymmetrize", "chi0", "is_alternating", "is_symmetric", "parity",
    "twist_character", "ColorLieAlgebra", "GradedBasis", "check_antisymmetry", "check_color_jacobi",
    "check_super", "gl_chi", "twist_algebra", "CycloNumber", "cyclotomic_polynomial", "embed_scalar",
    "GroupElement", "GroupPresentation", "cyclic_intersection", "smith_normal_form", "MINUS_ONE", "ONE",
    "RootScalar", "canonical_root", "root_of_unity", "solve_root_constraints", "symbol",
    "construct_sigma", "reduce_to_alternating", "scheunert_certificate",
]
