"""Bichromatic arc-graph optimization on a line and on a circle.

Exact fast solvers for non-crossing Hamiltonian paths, minimum spanning
trees (with and without crossings), minimum non-crossing perfect
matchings, and traveling-salesman tours of chunked circle points, each
paired with an independent brute-force oracle for small-scale
verification.
"""

from .core import (
    ArcEdge,
    ArcGraph,
    CircleInstance,
    CollinearInstance,
    Color,
    Page,
    SingleColorError,
    SolveReport,
    StructureKind,
    UnbalancedInstanceError,
    ValidationResult,
    arcs_cross,
    count_chord_crossings,
    edge_weight,
    edge_weight_circle,
    edge_weight_collinear,
    validate,
)

__version__ = "0.1.0"
