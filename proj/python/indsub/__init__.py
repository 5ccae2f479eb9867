"""Certified stable sets or induced K_t subdivisions."""

from ._core import (
    Graph,
    check_certificate,
    chordal,
    exact_max_stable,
    exhaustive_subdivision_search,
    gnp,
    induced_cycle_in_range,
    planted_subdivision,
    read_graph,
    solve,
    write_graph,
)

__all__ = [
    "Graph",
    "check_certificate",
    "chordal",
    "exact_max_stable",
    "exhaustive_subdivision_search",
    "gnp",
    "induced_cycle_in_range",
    "planted_subdivision",
    "read_graph",
    "solve",
    "write_graph",
]
