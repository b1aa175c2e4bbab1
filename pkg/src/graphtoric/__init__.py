"""Exact moment polytopes, lattices, and toric smoothness verdicts for
trivalent graphs.

A trivalent graph of genus g determines an inequality system in
dimension 3g-3 (one tetrahedron block per graph vertex), a lattice
refining Z^n by trinion half-sums, and a normal fan.  This package
computes all three exactly over the rationals and decides whether the
associated toric variety is smooth.
"""

from .exactmath import QMatrix, det, hnf, inverse, primitive, primitive_direction, rank, solve
from .graph_core import (
    DegreeViolation,
    Disconnected,
    GenusTooSmall,
    GraphError,
    GraphSyntaxError,
    TrivalentGraph,
    TrinionTriple,
    genus,
    multi_theta,
    parse_graph,
    serialize_graph,
    validate,
)
from .lattice_fan import (
    ConsistencyError,
    DelzantVerdict,
    Fan,
    Lattice,
    LatticePolytopeVerdict,
    SingularityReport,
    build_lattice,
    delzant_check,
    is_lattice_point,
    is_lattice_polytope,
    map_fan,
    normal_fan,
    singularity_report,
)
from .polytope import (
    EdgeLabelling,
    HPolytope,
    NotFullDimensional,
    SimplicityVerdict,
    UnboundedPolytope,
    VPolytope,
    brute_force_vertices,
    build_hrep,
    contains,
    cube_vertex_labellings,
    dimension,
    enumerate_vertices,
    facet_defining_rows,
    format_hrep,
    format_vrep,
    is_simple,
)
from .cli import AnalysisReport, analyze_graph

__all__ = [
    "AnalysisReport",
    "ConsistencyError",
    "DegreeViolation",
    "DelzantVerdict",
    "Disconnected",
    "EdgeLabelling",
    "Fan",
    "GenusTooSmall",
    "GraphError",
    "GraphSyntaxError",
    "HPolytope",
    "Lattice",
    "LatticePolytopeVerdict",
    "NotFullDimensional",
    "QMatrix",
    "SimplicityVerdict",
    "SingularityReport",
    "TrinionTriple",
    "TrivalentGraph",
    "UnboundedPolytope",
    "VPolytope",
    "analyze_graph",
    "brute_force_vertices",
    "build_hrep",
    "build_lattice",
    "contains",
    "cube_vertex_labellings",
    "delzant_check",
    "det",
    "dimension",
    "enumerate_vertices",
    "facet_defining_rows",
    "format_hrep",
    "format_vrep",
    "genus",
    "hnf",
    "inverse",
    "is_lattice_point",
    "is_lattice_polytope",
    "is_simple",
    "map_fan",
    "multi_theta",
    "normal_fan",
    "parse_graph",
    "primitive",
    "primitive_direction",
    "rank",
    "serialize_graph",
    "singularity_report",
    "solve",
    "validate",
]
