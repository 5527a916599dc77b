"""Oriented cubes, cross-polytopes, their adjoints and single-element
extensions, with exact realizations and a small enumeration harness."""

from .extensions import (
    Localization,
    adjoint_to_cube,
    cube_to_adjoint,
    extend,
    extend_by_infinity,
    infinity_localization,
    is_adjoint,
    is_localization,
    is_oriented_cube,
)
from .generators import canonical_adjoint, cross_polytope, cross_polytope_plus_zero, real_cube, rectangles
from .om import OMError, OrientedMatroid, isomorphism, reorientation_isomorphism, validate_circuit_axioms
from .realization import PointConfig, om_from_points
from .signed import Ground, SignedSet

__all__ = [
    "Ground",
    "Localization",
    "OMError",
    "OrientedMatroid",
    "PointConfig",
    "SignedSet",
    "adjoint_to_cube",
    "canonical_adjoint",
    "cross_polytope",
    "cross_polytope_plus_zero",
    "cube_to_adjoint",
    "extend",
    "extend_by_infinity",
    "infinity_localization",
    "is_adjoint",
    "is_localization",
    "is_oriented_cube",
    "isomorphism",
    "om_from_points",
    "real_cube",
    "rectangles",
    "reorientation_isomorphism",
    "validate_circuit_axioms",
]
