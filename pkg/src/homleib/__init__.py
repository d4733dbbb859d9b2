"""Exact cohomology and cup products for finite-dimensional Hom-Leibniz algebras over Q."""

from .algebra import AlgebraSpec, AxiomError, AxiomReport, LinearMap, check_kind
from .complexes import (
    Cochain,
    ResourceCapError,
    boundary_matrix,
    cohomology,
    cohomology_dims,
    homology_dims,
    make_cochain,
)
from .cup import CupContext, cup
from .linalg import Matrix, Subspace
from .shuffles import Permutation, SignedPermSum, pinned_variant, rho

__all__ = [
    "AlgebraSpec", "AxiomError", "AxiomReport", "LinearMap", "check_kind",
    "Cochain", "ResourceCapError", "boundary_matrix", "cohomology", "cohomology_dims",
    "homology_dims", "make_cochain", "CupContext", "cup", "Matrix", "Subspace",
    "Permutation", "SignedPermSum", "pinned_variant", "rho",
]
