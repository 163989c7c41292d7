"""Cut-condition checking: exhaustive subset enumeration and product formulas.

The k-cut condition demands d(S) >= |S| for every nonempty S with |S| <= k,
where d(S) counts boundary edges.  Checking is exhaustive and certificate
grade: exceeding the enumeration cap is an error, never a silent pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph

DEFAULT_ENUMERATION_CAP = 20_000_000


class EnumerationCapExceeded(Exception):
    """The requested subset enumeration is too large for an exhaustive check."""


@dataclass(frozen=True)
class CutWitness:
    """A vertex set violating the cut condition: boundary < size."""

    vertices: tuple[int, ...]
    boundary: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "size": self.size, "boundary": self.boundary}


def _subset_boundary(adj, degrees, subset: tuple[int, ...]) -> int:
    members = set(subset)
    internal = 0
    for v in subset:
        for w in adj[v]:
            if w in members:
                internal += 1
    # every internal edge counted twice
    return sum(degrees[v] for v in subset) - internal


def check_k_cut(g: Graph, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Optional[CutWitness]:
    """Exhaustively check d(S) >= |S| for all S with 1 <= |S| <= k.

    Returns None when the condition holds, otherwise the first witness in
    (size, lexicographic) order.  Raises EnumerationCapExceeded when the
    subset count would exceed the cap.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    k = min(k, g.n)
    total = sum(math.comb(g.n, i) for i in range(1, k + 1))
    if total > cap:
        raise EnumerationCapExceeded(
            f"{total} subsets exceed the cap of {cap}; instance too large for an exhaustive check"
        )
    adj = g.adjacency()
    degrees = [len(a) for a in adj]
    for size in range(1, k + 1):
        for subset in combinations(range(g.n), size):
            boundary = _subset_boundary(adj, degrees, subset)
            if boundary < size:
                return CutWitness(subset, boundary)
    return None


def check_full_cut(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> Optional[CutWitness]:
    """Full cut condition: all S with |S| <= floor(n/2).

    Stated for graphs on 2n vertices; odd orders are checked up to
    floor(n/2) as a documented extension.
    """
    if g.n < 2:
        raise ValueError("full cut condition needs at least 2 vertices")
    return check_k_cut(g, g.n // 2, cap=cap)


@dataclass(frozen=True)
class ProductViolation:
    """Outcome of the doubled-cut product criterion."""

    violated: bool
    product_size: int
    product_edges: int


def product_violation(g0_size: int, g0_edges: int, h0_size: int, h0_edges: int) -> ProductViolation:
    """Product criterion: if 2*e(G0) < |G0| and 2*e(H0) < |H0| then the
    product set has fewer internal edges than vertices.

    ``product_edges`` is the exact induced-edge count of the product of the
    two induced subgraphs: |G0|*e(H0) + |H0|*e(G0).
    """
    product_size = g0_size * h0_size
    product_edges = g0_size * h0_edges + h0_size * g0_edges
    violated = 2 * g0_edges < g0_size and 2 * h0_edges < h0_size
    if violated and not product_edges < product_size:
        raise AssertionError(
            "product criterion arithmetic broke: "
            f"{product_edges} >= {product_size} despite doubled hypotheses"
        )
    return ProductViolation(violated, product_size, product_edges)


def pp_upper_bound_from_witness(g: Graph, vertices: Iterable[int]) -> int:
    """|S| - 1 is an upper bound on pp(G) whenever d(S) < |S|: terminals on S
    paired into the complement cannot all escape over the boundary."""
    s = sorted(set(vertices))
    if not s:
        raise ValueError("witness set must be nonempty")
    adj = g.adjacency()
    degrees = [len(a) for a in adj]
    boundary = _subset_boundary(adj, degrees, tuple(s))
    if boundary >= len(s):
        raise ValueError(f"set does not violate the cut condition: d(S)={boundary} >= |S|={len(s)}")
    return len(s) - 1
