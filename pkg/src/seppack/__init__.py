"""Totally separable packing toolkit.

Certificates for separable Hadwiger lower bounds, spherical-code search and
verification, Reed-Solomon l1-ball packings, and exact planar contact
geometry for origin-symmetric convex polygons.
"""

from .certificates import (
    SeparableCertificate,
    certificate_from_json,
    certificate_to_json,
    hadwiger_upper_bound_smooth,
    largest_reduction_epsilon,
    lift_from_code,
    reduce_certificate,
    verify_certificate,
)
from .ell1 import (
    BinaryCode,
    L1Packing,
    rs_indicator_code,
    min_distance,
    min_distance_neighbor_count,
    separating_functional,
    touching_pairs,
    verify_total_separability_l1,
)
from .errors import (
    ConstructionGapError,
    DomainError,
    KindError,
    PackingError,
    ParseError,
    SeppackError,
)
from .linalg import (
    EPS,
    Functional,
    Matrix,
    Vec,
    rank_exact,
    rank_lower_bound_trace,
    sample_unit_ball,
)
from .measures import (
    AngularMeasure,
    arc_measure,
    build_constrained_measure,
    separable_config_arc_bound,
    polygon_angle_sum,
    prescribed_zero_arcs,
    triangle_angle_sum,
)
from .planar import (
    ContactGraph,
    PlanarPacking,
    SymmetricPolygon,
    boundary_analysis,
    classify_body,
    contact_graph,
    max_contact_count,
    gauge,
    generate_packing,
    hexagon_body,
    is_quasi_hexagon,
    min_area_circumscribed_parallelogram,
    octagon_body,
    square_body,
    verify_total_separability,
)
from .polyomino import (
    CellCluster,
    adjacency_count,
    max_adjacency,
    merge_clusters,
    optimal_adjacency,
    optimal_cluster,
)
from .report import VerificationReport, Violation
from .spherical import (
    SphericalCode,
    deletion_search,
    format_code_file,
    parse_code_file,
    verify_code,
)
from .svg import render_svg

__version__ = "0.1.0"
