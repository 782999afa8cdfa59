"""Eccentricity spectra of trees and their complements, with exhaustive verification."""

from .closed_forms import (
    BoundValue,
    ClosedFormSpectrum,
    adjacency_tree_bounds,
    bounds_diam3,
    energy_bounds_diam3,
    energy_t3_complement,
    energy_t4_complement,
    exceptional_root,
    nordhaus_gaddum_bounds,
    path_adjacency_energy,
    path_complement_energy,
    spec_t3_complement,
    spec_t4_complement,
    tree_ecc_minima,
    xi1_path_complement,
)
from .eigen import GroupedSpectrum, Spectrum, eigenvalues, energy, group, is_symmetric_about_origin, xi
from .enumeration import enumerate_free_trees, enumerate_with_connected_complement
from .graphs import (
    EccInfo,
    Graph,
    Tree,
    build_dnd,
    build_t3,
    canonical_code,
    complement,
    distances,
    ecc_info,
    is_connected,
    path,
    star,
    tree_from_pruefer,
)
from .matrices import (
    Partition,
    QuotientResult,
    adjacency_matrix,
    complement_ecc_vs_2a,
    distance_matrix,
    eccentricity_matrix,
    quotient,
)
from .verifier import TheoremId, TheoremReport, appendix_table_crosscheck, check, extremal_table

__version__ = "0.1.0"

__all__ = [
    "BoundValue",
    "ClosedFormSpectrum",
    "adjacency_tree_bounds",
    "bounds_diam3",
    "energy_bounds_diam3",
    "energy_t3_complement",
    "energy_t4_complement",
    "exceptional_root",
    "nordhaus_gaddum_bounds",
    "path_adjacency_energy",
    "path_complement_energy",
    "spec_t3_complement",
    "spec_t4_complement",
    "tree_ecc_minima",
    "xi1_path_complement",
    "GroupedSpectrum",
    "Spectrum",
    "eigenvalues",
    "energy",
    "group",
    "is_symmetric_about_origin",
    "xi",
    "enumerate_free_trees",
    "enumerate_with_connected_complement",
    "EccInfo",
    "Graph",
    "Tree",
    "build_dnd",
    "build_t3",
    "canonical_code",
    "complement",
    "distances",
    "ecc_info",
    "is_connected",
    "path",
    "star",
    "tree_from_pruefer",
    "Partition",
    "QuotientResult",
    "adjacency_matrix",
    "complement_ecc_vs_2a",
    "distance_matrix",
    "eccentricity_matrix",
    "quotient",
    "TheoremId",
    "TheoremReport",
    "appendix_table_crosscheck",
    "check",
    "extremal_table",
]
