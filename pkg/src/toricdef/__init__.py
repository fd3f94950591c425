"""Deformation invariants of affine Gorenstein toric varieties, computed exactly."""

from .errors import (
    ContractError,
    DomainError,
    InputError,
    InvalidStructure,
    InvariantViolation,
    NotGorensteinError,
    ResourceError,
    UnsupportedRepresentation,
)
from .lattice import GorensteinCone, QPolyhedron, dual_cone, in_interior, lattice_length, q_polyhedron
from .algebra import SemigroupAlgebra, enumerate_window, jacobian_ring_dim, surface_algebra

__version__ = "0.1.0"
