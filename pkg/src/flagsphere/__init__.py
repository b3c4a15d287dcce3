"""Exact face-enumeration invariants (f-, h-, h-tilde-, gamma-polynomials)
of finite simplicial complexes, integer homology certification, and
verifiers for the identities relating them."""

from .complexes import Graph, SimplicialComplex
from .homology import (
    HomologyProfile,
    boundary_matrix,
    is_generalized_homology_sphere,
    is_homology_sphere,
    reduced_homology,
)
from .invariants import (
    LINK_SUM_CONSTANT,
    SphereInvariants,
    TheoremWitness,
    analyze,
    charney_davis_value,
    dehn_sommerville_check,
    gamma_vector,
    h_polynomial,
    h_tilde,
    join_multiplicativity_check,
    link_derivative_identity,
    orbifold_euler,
    theorem_identity,
)
from .polynomial import GammaVector, IntPolynomial

__all__ = [
    "Graph",
    "SimplicialComplex",
    "HomologyProfile",
    "boundary_matrix",
    "is_generalized_homology_sphere",
    "is_homology_sphere",
    "reduced_homology",
    "LINK_SUM_CONSTANT",
    "SphereInvariants",
    "TheoremWitness",
    "analyze",
    "charney_davis_value",
    "dehn_sommerville_check",
    "gamma_vector",
    "h_polynomial",
    "h_tilde",
    "join_multiplicativity_check",
    "link_derivative_identity",
    "orbifold_euler",
    "theorem_identity",
    "GammaVector",
    "IntPolynomial",
]

__version__ = "0.1.0"
