"""
Service layer for the resolution engine.

Curve graph handling, local models, towers, the global divisor complex,
the surface dual graph and the verifier.
"""

from jung.services.assembler import build_complex, restricted_class, self_intersection_class
from jung.services.curve_graph import (
    brieskorn_graph,
    normalize_parity,
    order_vertices,
    random_refinement,
    validate,
)
from jung.services.surface_graph import (
    blow_down_minimal,
    classify_ade,
    graphs_isomorphic,
    strict_transform_curve,
    surface_dual_graph,
)
from jung.services.tower import build_tower, vertex_context
from jung.services.verifier import minimal_surface_graph, run_all

__all__ = [
    "validate",
    "normalize_parity",
    "order_vertices",
    "brieskorn_graph",
    "random_refinement",
    "vertex_context",
    "build_tower",
    "build_complex",
    "self_intersection_class",
    "restricted_class",
    "strict_transform_curve",
    "surface_dual_graph",
    "blow_down_minimal",
    "classify_ade",
    "graphs_isomorphic",
    "minimal_surface_graph",
    "run_all",
]
