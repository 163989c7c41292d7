"""Edge-disjoint path systems in Cartesian product graphs.

Library surface: graph construction and generators, terminal pairings and
the verifying path-system machinery, bipartite matching, cut-condition
certificates, an exact routing oracle, the constructive product routers,
and the three-phase router for products of complete bipartite graphs.
"""

__version__ = "0.1.0"

from .graph import (
    Graph,
    LayerRef,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    edge_boundary,
    generate,
    hypercube,
    layer_subgraph,
    path_graph,
    star_graph,
)
from .pairing import EdgeLedger, Pairing, Path, PathSystem, VerifyReport, verify

__all__ = [
    "Graph",
    "LayerRef",
    "cartesian_product",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "edge_boundary",
    "generate",
    "hypercube",
    "layer_subgraph",
    "path_graph",
    "star_graph",
    "EdgeLedger",
    "Pairing",
    "Path",
    "PathSystem",
    "VerifyReport",
    "verify",
    "__version__",
]
