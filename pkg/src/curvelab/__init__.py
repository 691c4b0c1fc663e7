"""Combinatorial workbench for surfaces assembled from pairs of pants.

Surfaces, finite or infinite-type, are presented as gluing graphs of
three-holed spheres.  On top of that presentation the package classifies
decomposition curves, matches the ends of the curve adjacency graph with
the ends of the surface, does exact intersection arithmetic in torus and
sphere windows, builds superinjective curve maps by cutting and gluing,
and ships seeded verification sweeps for all of it.
"""

from .errors import (
    BijectionFailure,
    ComplexityTooLow,
    CountAnomaly,
    CurveLabError,
    DepthExceedsTruncation,
    DepthMismatch,
    DisconnectedGraph,
    FormatError,
    GadgetTooSmall,
    IntersectionTooSmall,
    NoRoom,
    NonIntegralGenus,
    NotSeparating,
    NotTorusWindow,
    UndefinedPair,
    UnknownCurve,
    WrongIntersection,
    ZeroSlope,
)
from .surface import (
    Curve,
    GluingGraph,
    InfiniteModel,
    PantsSlot,
    SurfaceSignature,
    Violation,
    build_finite_surface,
    build_truncation,
    dumps_surface,
    loads_surface,
    signature,
    surface_from_json,
    surface_to_json,
    validate,
)
from .pants_graphs import (
    AdjacencyGraph,
    CurveClass,
    adjacency_graph,
    classify_all,
    classify_curve,
    cut_vertices,
    outer_degree_check,
    peripheral_pairs,
    random_gluing_graph,
)
from .ends import (
    EndTree,
    EndTreeNode,
    end_tree,
    end_trees_isomorphic,
    induced_end_correspondence,
    surface_end_tree,
)
from .curves import (
    DualChain,
    PantsCurve,
    Slope,
    Window,
    WindowCurve,
    WindowSet,
    abstract_window,
    dt_uniqueness_check,
    dt_vector,
    format_ref,
    global_intersection,
    is_triple,
    make_slope,
    parse_ref,
    resolve_ref,
    sch04_common_neighbors,
    slopes_up_to,
    triple_completion,
    twist,
    window_around,
    window_curve_separates,
    window_intersection,
)
from .complexes import (
    LocalCurveGraph,
    disjointness_witness,
    local_graph,
    schmutz_path,
)
from .morphisms import (
    CutGlueResult,
    VertexMap,
    check_superinjective,
    cut_and_glue,
    nonhomeomorphic_counterexample,
    surfaces_homeomorphic,
)
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "AdjacencyGraph",
    "BijectionFailure",
    "ComplexityTooLow",
    "CountAnomaly",
    "Curve",
    "CurveClass",
    "CurveLabError",
    "CutGlueResult",
    "DepthExceedsTruncation",
    "DepthMismatch",
    "DisconnectedGraph",
    "DualChain",
    "EndTree",
    "EndTreeNode",
    "FormatError",
    "GadgetTooSmall",
    "GluingGraph",
    "InfiniteModel",
    "IntersectionTooSmall",
    "LocalCurveGraph",
    "NoRoom",
    "NonIntegralGenus",
    "NotSeparating",
    "NotTorusWindow",
    "PantsCurve",
    "PantsSlot",
    "SUITES",
    "Slope",
    "SurfaceSignature",
    "UndefinedPair",
    "UnknownCurve",
    "VertexMap",
    "Violation",
    "Window",
    "WindowCurve",
    "WindowSet",
    "WrongIntersection",
    "ZeroSlope",
    "abstract_window",
    "adjacency_graph",
    "build_finite_surface",
    "build_truncation",
    "check_superinjective",
    "classify_all",
    "classify_curve",
    "cut_and_glue",
    "cut_vertices",
    "disjointness_witness",
    "dt_uniqueness_check",
    "dt_vector",
    "dumps_surface",
    "end_tree",
    "end_trees_isomorphic",
    "format_ref",
    "global_intersection",
    "induced_end_correspondence",
    "is_triple",
    "loads_surface",
    "local_graph",
    "make_slope",
    "nonhomeomorphic_counterexample",
    "outer_degree_check",
    "parse_ref",
    "peripheral_pairs",
    "random_gluing_graph",
    "resolve_ref",
    "run_suite",
    "sch04_common_neighbors",
    "schmutz_path",
    "signature",
    "slopes_up_to",
    "surface_end_tree",
    "surface_from_json",
    "surface_to_json",
    "surfaces_homeomorphic",
    "triple_completion",
    "twist",
    "validate",
    "window_around",
    "window_curve_separates",
    "window_intersection",
]
