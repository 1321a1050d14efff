"""Forcing-number toolkit: graphs, the forcing process, and girth bounds."""

from ._core import (
    Graph,
    ParseError,
    UnsupportedSizeError,
    analyze,
    closure,
    components,
    davila_kenter_threshold,
    degree_stats,
    encode_edge_list,
    encode_graph6,
    ex_c3c4,
    forcing_number_exact,
    generate,
    girth,
    girth_degree_bound,
    greedy_minimal_forcing_set,
    is_forcing_set,
    is_isomorphic,
    mantel_max_edges,
    max_c3c4_free,
    parse_edge_list,
    parse_graph6,
    verify_certificate,
    verify_graph,
)

__all__ = [
    "Graph",
    "ParseError",
    "UnsupportedSizeError",
    "analyze",
    "closure",
    "components",
    "davila_kenter_threshold",
    "degree_stats",
    "encode_edge_list",
    "encode_graph6",
    "ex_c3c4",
    "forcing_number_exact",
    "generate",
    "girth",
    "girth_degree_bound",
    "greedy_minimal_forcing_set",
    "is_forcing_set",
    "is_isomorphic",
    "mantel_max_edges",
    "max_c3c4_free",
    "parse_edge_list",
    "parse_graph6",
    "verify_certificate",
    "verify_graph",
]
