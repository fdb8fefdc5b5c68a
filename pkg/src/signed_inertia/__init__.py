"""Exact Laplacian inertia analysis for weighted signed graphs."""

from .crossings import (
    CrossingPolynomial,
    CrossingProfile,
    SweepPoint,
    crossing_poly_charpoly,
    crossing_poly_forest,
    crossing_profile,
    inertia_sweep,
)
from .errors import CapExceededError, GraphParseError
from .explorer import (
    InertiaBounds,
    InertiaSet,
    Witness,
    explore,
    feasible_inertias,
    impossibility_by_rank,
    inertia_bounds,
    lattice_capacity,
    max_flexibility,
    minkowski_check,
    vertex_count_capacity,
)
from .graphio import format_graph, load_graph, parse_graph, save_graph
from .laplacian import (
    SymmetricRationalMatrix,
    char_poly,
    eigenvalues_float,
    frobenius_distance_squared,
    inertia,
    is_simple_spectrum,
    perturb_simple,
    weighted_laplacian,
)
from .ratpoly import (
    Inertia,
    Rational,
    RationalPolynomial,
    isolate_positive_roots,
    rational_root_in,
    real_rooted_inertia,
    square_free_part,
)
from .sgraph import (
    Block,
    CliqueJoin,
    ComponentProfile,
    SignedGraph,
    WeightedSignedGraph,
    at_parameter,
    blocks,
    build_lattice_witness,
    classify_clique_join,
    component_profile,
    dot,
    mixed_triangle,
    negative_join,
    reweighted,
    scale,
    scale_negative,
    triangle_chain,
    unique_inertia,
    unit_weighting,
)

__version__ = "0.1.0"
