"""Combinatorics of rational surface singularity resolutions.

Weighted dual trees, exact intersection forms, fundamental cycles, crepant
contractions with their ADE content, AR quivers, and the monomial side of
the cyclic quotient ``1/(2n-1)(1,2)``.
"""

from .arquiver import Quiver, ar_quiver, double, dual_graph_of_morphism, emit_dot
from .contraction import (
    ADEType,
    ContractionResult,
    CurvePartition,
    ade_type,
    contract,
    contraction_discrepancy,
    partition_curves,
)
from .dualgraph import Cycle, DualGraph, LabelledTree, TreeError, degree_census, parse_tree, serialize_tree
from .families import FamilySpec, generate, hj_chain, taut_census
from .fundcycle import RationalityReport, artin_check, in_ztop, laufer
from .lattice import (
    IntersectionForm,
    discrepancies,
    intersection_matrix,
    is_negative_definite,
    pair,
    solve_rational,
)
from .quotalg import hilbert_consistency, is_invariant, lambda_presentation, verify_minor_relations

__version__ = "0.1.0"
