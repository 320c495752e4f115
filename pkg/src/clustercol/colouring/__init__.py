from .core import ClusterReport, Colouring, Witness, clustering, verify_clustering, verify_defect
from .oracles import chromatic_number, cluster_colourings, defect_oracle, optimal_cluster_colouring
from .algorithms import (
    erdos_posa_hitting_set,
    heart_colouring,
    parity_colouring,
    two_colour,
    two_colour_2connected,
    two_colour_bound_holds,
    weak_closure_colouring,
    weak_closure_colours,
)

__all__ = [
    "ClusterReport",
    "Colouring",
    "Witness",
    "clustering",
    "verify_clustering",
    "verify_defect",
    "chromatic_number",
    "cluster_colourings",
    "defect_oracle",
    "optimal_cluster_colouring",
    "erdos_posa_hitting_set",
    "heart_colouring",
    "parity_colouring",
    "two_colour",
    "two_colour_2connected",
    "two_colour_bound_holds",
    "weak_closure_colouring",
    "weak_closure_colours",
]
