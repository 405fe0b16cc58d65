"""Exact Boij-Soederberg computations: pure diagrams, greedy decompositions,
facet equations, supernatural cohomology tables and construction ranks."""

from .betti_decomposition import (
    Decomposition,
    IntegralityReport,
    decompose_betti,
    integrality_report,
    max_peel_coefficient,
    oracle_membership,
    verify_decomposition,
)
from .cohomology import (
    CohomologyTable,
    TableDecomposition,
    corner_peel_coefficient,
    corner_positions,
    decompose_cohomology,
    dim_table,
    gamma_facet_functional,
    root_sequence_of,
    supernatural_table,
)
from .constructions import conjugate, equivariant_betti, generic_matrix_betti, schur_dimension
from .diagrams import (
    BettiDiagram,
    Order,
    PureDiagram,
    Window,
    compare_deg,
    hk_residual,
    lower_bound_sequence,
    pure_diagram,
)
from .errors import *  # noqa: F401,F403
from .fan import (
    CoefficientDiagram,
    FacetDescriptor,
    FacetKind,
    classify_facet,
    count_maximal_chains,
    evaluate_functional,
    h_table,
    lower_facet_equation,
    maximal_chains,
    pairing,
    upper_facet_equation,
)

__version__ = "0.1.0"
