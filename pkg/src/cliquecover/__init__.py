"""Clique counting and clique structure for graph unions of clique collections."""

from .counting import (
    MaximalClique,
    clique_extent,
    clique_gf,
    clique_gf_at,
    clique_number,
    count_all_cliques,
    count_cliques_containing,
    count_edges_cell_formula,
    count_edges_degree,
    count_nontrivial_cliques,
    count_r_cliques_maximal,
    count_r_cliques_pie,
    enumerate_maximal_cliques,
    is_maximal_clique,
)
from .families import (
    enumerate_intersecting_over,
    enumerate_maximal_intersecting,
    enumerate_path_intersecting_over,
    is_intersecting,
    is_maximal_intersecting,
    is_path_intersecting,
)
from .model import (
    CapExceededError,
    CliqueCollection,
    CollectionError,
    GraphUnion,
    ValidityReport,
    graph_union,
    is_single_clique,
    load_collection,
    serialize_collection,
    validate_r_collection,
)
from .partition import (
    GammaPartition,
    adjacent,
    build_gamma_partition,
    cell_degree,
    check_orbit_automorphism,
)
from .polynomial import CountPolynomial
from .quotient import QuotientGraph, export_quotient, quotient_matrix, spectrum_contained
from .signatures import (
    connected_subgraph_gf,
    count_connected_signatures,
    count_signatures,
    count_signatures_with_support,
    count_subgraphs_with_signature,
    is_connected_subgraph,
    signature_of,
)

__version__ = "0.1.0"
