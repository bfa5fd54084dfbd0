"""All possible input nodes of a directed network from one maximum matching."""

__version__ = "0.1.0"

from .control import (
    ControlReport,
    Method,
    all_input,
    alternating_candidates,
    baseline_all_input,
    extract_mis,
    input_density,
)
from .graph import BipartiteView, DirectedGraph, build_graph, degree_stats, to_bipartite
from .matching import Matching, hopcroft_karp, verify_maximum, verify_valid

__all__ = [
    "BipartiteView",
    "ControlReport",
    "DirectedGraph",
    "Matching",
    "Method",
    "all_input",
    "alternating_candidates",
    "baseline_all_input",
    "build_graph",
    "degree_stats",
    "extract_mis",
    "hopcroft_karp",
    "input_density",
    "to_bipartite",
    "verify_maximum",
    "verify_valid",
]
