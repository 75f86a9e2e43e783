"""Berge containment testing, saturated hypergraph constructions, and exact
saturation-number search at desk scale."""

from .core import (
    Graph,
    Hypergraph,
    ParseError,
    add_edge,
    count_missing_edges,
    dominates,
    is_k_uniform,
    missing_edges,
    parse_graph,
    parse_graph_with_map,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from .engine import (
    BergeWitness,
    SearchConstraints,
    all_subsets_are_cores,
    contains_berge,
    creates_new_berge,
    edge_assignment,
    find_berge_witness,
    is_ell_good,
    max_bipartite_matching,
    validate_witness,
)
from .invariants import (
    InvariantReport,
    complete_join,
    compute_invariants,
    feedback_number,
    girth,
    independence_number,
    make_clique,
    make_cycle,
    make_path,
    make_star,
    min_degree,
    vertex_cover_number,
)
from .constructions import (
    ConstructionLabels,
    SParameters,
    build_c_k_4,
    build_c_k_ell,
    build_h_feedback,
    build_h_min_deg,
    build_s,
    solve_ab,
)
from .saturation import (
    PairGoodnessReport,
    SaturationReport,
    all_cores_present,
    all_pairs_good,
    is_berge_free,
    is_saturated,
)
from .oracle import (
    SearchResult,
    berge_oracle,
    greedy_saturate,
    min_saturation_search,
)

__all__ = [
    "BergeWitness",
    "ConstructionLabels",
    "Graph",
    "Hypergraph",
    "InvariantReport",
    "PairGoodnessReport",
    "ParseError",
    "SParameters",
    "SaturationReport",
    "SearchConstraints",
    "SearchResult",
    "add_edge",
    "all_cores_present",
    "all_pairs_good",
    "all_subsets_are_cores",
    "berge_oracle",
    "build_c_k_4",
    "build_c_k_ell",
    "build_h_feedback",
    "build_h_min_deg",
    "build_s",
    "complete_join",
    "compute_invariants",
    "contains_berge",
    "count_missing_edges",
    "creates_new_berge",
    "dominates",
    "edge_assignment",
    "feedback_number",
    "find_berge_witness",
    "girth",
    "greedy_saturate",
    "independence_number",
    "is_berge_free",
    "is_ell_good",
    "is_k_uniform",
    "is_saturated",
    "make_clique",
    "make_cycle",
    "make_path",
    "make_star",
    "max_bipartite_matching",
    "min_degree",
    "min_saturation_search",
    "missing_edges",
    "parse_graph",
    "parse_graph_with_map",
    "parse_hypergraph",
    "serialize_graph",
    "serialize_hypergraph",
    "solve_ab",
    "validate_witness",
    "vertex_cover_number",
]
