"""Toolkit for stacked spheres, Walkup-class complexes and tight triangulations.

Regenerates the catalog of cyclically symmetric 4-manifold triangulations
from their orbit presentations, checks the combinatorial criteria that
certify them (stackedness of links, class membership, homology over GF(2)
and Q, orientability, automorphism groups, face-vector bounds), and turns
graph-plus-subtree-family data into neighborly Kbar members and back.
"""

from .core import Complex, Face, FaceVector, GeneralComplex, as_face
from .errors import CapacityError, DomainError, ParseError
from .graphs import Graph
from .classify import (BoundEntry, BoundReport, check_lower_bounds, cone,
                       dual_graph, in_walkup_class, is_closed,
                       is_pseudomanifold, is_stacked_ball, is_stacked_sphere,
                       is_weak_pseudomanifold)
from .homology import (GF2, Q, BettiVector, ChainBoundary, TightCertificate,
                       TypeReport, betti_numbers, boundary_matrix,
                       certify_tight, composes_to_zero, identify_type,
                       is_orientable, is_tight_bruteforce)
from .symmetry import (GroupDescription, automorphism_group, group_closure,
                       group_elements, is_automorphism, verify_aut_equality)
from .construct import (HypothesisError, HypothesisReport, OrbitPresentation,
                        TreeFamily, complex_from_tree_family, defines_subset,
                        expand_orbit, tree_family_from_complex,
                        verify_hypotheses)
from . import catalog, fileio, generators

__version__ = "0.1.0"

__all__ = [
    "Complex", "Face", "FaceVector", "GeneralComplex", "as_face",
    "CapacityError", "DomainError", "ParseError", "Graph",
    "BoundEntry", "BoundReport", "check_lower_bounds", "cone", "dual_graph",
    "in_walkup_class", "is_closed", "is_pseudomanifold", "is_stacked_ball",
    "is_stacked_sphere", "is_weak_pseudomanifold",
    "GF2", "Q", "BettiVector", "ChainBoundary", "TightCertificate",
    "TypeReport", "betti_numbers", "boundary_matrix", "certify_tight",
    "composes_to_zero", "identify_type", "is_orientable",
    "is_tight_bruteforce",
    "GroupDescription", "automorphism_group", "group_closure",
    "group_elements", "is_automorphism", "verify_aut_equality",
    "HypothesisError", "HypothesisReport", "OrbitPresentation", "TreeFamily",
    "complex_from_tree_family", "defines_subset", "expand_orbit",
    "tree_family_from_complex", "verify_hypotheses",
    "catalog", "fileio", "generators",
]
