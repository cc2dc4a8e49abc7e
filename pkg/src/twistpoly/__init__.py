"""Delta-matroids, twist polynomials, and bouquet ribbon graphs."""

from .core import (
    DeltaMatroid,
    ParseError,
    Predicates,
    SetSystem,
    TRIVIAL,
    UnsupportedSizeError,
    delete,
    direct_sum,
    dual,
    format_dm,
    is_connected,
    is_delta_matroid,
    iter_elements,
    loops_coloops,
    mask_of,
    matroid_nullity,
    matroid_rank,
    min_max_parts,
    parse_dm,
    predicates,
    restrict,
    rho,
    twist,
)
from .poly import (
    WidthPolynomial,
    twist_polynomial_fast,
    twist_polynomial_naive,
    twist_width,
    width,
)
from .gf2 import (
    IntersectionGraph,
    SymMatrixGF2,
    delta_matroid_of_matrix,
    format_gf2,
    format_graph,
    gf2_rank,
    graph_predicates,
    intersection_graph,
    is_normal_binary,
    matrix_of_normal,
    parse_gf2,
    parse_graph,
)
from .bouquet import (
    SignedRotation,
    boundary_components,
    canonical_bouquet,
    delta_matroid_of_bouquet,
    euler_genus,
    interlacement_matrix,
    parse_signed_rotation,
    partial_duality_polynomial,
)

__all__ = [
    "DeltaMatroid",
    "IntersectionGraph",
    "ParseError",
    "Predicates",
    "SetSystem",
    "SignedRotation",
    "SymMatrixGF2",
    "TRIVIAL",
    "UnsupportedSizeError",
    "WidthPolynomial",
    "boundary_components",
    "canonical_bouquet",
    "delete",
    "delta_matroid_of_bouquet",
    "delta_matroid_of_matrix",
    "direct_sum",
    "dual",
    "euler_genus",
    "format_dm",
    "format_gf2",
    "format_graph",
    "gf2_rank",
    "graph_predicates",
    "interlacement_matrix",
    "intersection_graph",
    "is_connected",
    "is_delta_matroid",
    "is_normal_binary",
    "iter_elements",
    "loops_coloops",
    "mask_of",
    "matrix_of_normal",
    "matroid_nullity",
    "matroid_rank",
    "min_max_parts",
    "parse_dm",
    "parse_gf2",
    "parse_graph",
    "parse_signed_rotation",
    "partial_duality_polynomial",
    "predicates",
    "restrict",
    "rho",
    "twist",
    "twist_polynomial_fast",
    "twist_polynomial_naive",
    "twist_width",
    "width",
]

__version__ = "0.1.0"
