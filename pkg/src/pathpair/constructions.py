"""Special graph families and adversarial routing instances.

Blown-up paths, the star-product blocking placement, the two
cut-condition-holds-but-routing-fails constructions, and the projective
grid subgrid whose size beats its boundary.  Adversarial instances carry a
claim that small cases are expected to survive oracle scrutiny.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, cartesian_product, star_graph
from .pairing import Pairing


@dataclass
class BlownUpPath:
    """Path on k classes, each class a clique K_m, consecutive classes fully
    joined.  Vertex i*m + j is the j-th vertex of class i."""

    k: int
    m: int
    graph: Graph
    class_of: tuple[int, ...]

    def class_members(self, i: int) -> range:
        return range(i * self.m, (i + 1) * self.m)


def blown_up_path(k: int, m: int) -> BlownUpPath:
    if k < 1 or m < 1:
        raise ValueError("blown-up path needs k >= 1 classes of size m >= 1")
    edges = []
    for i in range(k):
        base = i * m
        for a in range(m):
            for b in range(a + 1, m):
                edges.append((base + a, base + b))
        if i + 1 < k:
            nxt = base + m
            for a in range(m):
                for b in range(m):
                    edges.append((base + a, nxt + b))
    class_of = tuple(i for i in range(k) for _ in range(m))
    g = Graph(k * m, edges, labels=list(class_of), meta={"family": "blownup", "k": k, "m": m})
    return BlownUpPath(k, m, g, class_of)


@dataclass
class AdversarialInstance:
    """A graph plus terminal placement with a feasibility claim to be
    checked downstream by the oracle."""

    name: str
    graph: Graph
    pairing: Pairing
    claim: str  # "infeasible" or "feasible"


def star_product_blocking(b: int, d: int) -> AdversarialInstance:
    """Blocking placement on the product of two stars.

    Product of K_{1,b} and K_{1,d}: hub-hub vertex has degree b+d; vertices
    that mix one hub with one leaf have degree b+1 or d+1; leaf-leaf
    vertices have degree 2.  Terminals fill one degree-two column and one
    degree-two row, an extra degree-two vertex x pairs with the
    row/column intersection y, and the two mixed-degree vertices adjacent
    to the hub-hub vertex form the final pair.  Any routing of those two
    pairs competes for the two hub-hub edges.
    """
    if b < 2 or d < 2:
        raise ValueError("star product blocking needs b, d >= 2")
    g1 = star_graph(b)  # center 0, leaves 1..b
    g2 = star_graph(d)
    product = cartesian_product(g1, g2)

    def vid(i: int, j: int) -> int:
        return i * (d + 1) + j

    col_leaf = 1  # column anchored at leaf 1 of the first star
    row_leaf = 1  # row anchored at leaf 1 of the second star
    column = [vid(col_leaf, j) for j in range(1, d + 1)]  # degree-two column
    row = [vid(i, row_leaf) for i in range(1, b + 1)]  # degree-two row
    y = vid(col_leaf, row_leaf)
    x = vid(2, 2)  # degree-two vertex outside the column and row
    z_hub_col = vid(0, row_leaf)  # degree b+1, adjacent to hub-hub
    z_hub_row = vid(col_leaf, 0)  # degree d+1, adjacent to hub-hub

    pairs = [(x, y), (z_hub_col, z_hub_row)]
    rest = sorted(set(column + row) - {y})
    if len(rest) % 2 == 1:
        # odd leftover: bring in one more degree-two vertex (exists whenever
        # b+d is odd, since then (b-1)(d-1) >= 2)
        extra = next(
            vid(i, j)
            for i in range(1, b + 1)
            for j in range(1, d + 1)
            if vid(i, j) not in (x, y) and i != col_leaf and j != row_leaf
        )
        rest.append(extra)
    for a, c in zip(rest[0::2], rest[1::2]):
        pairs.append((a, c))
    expected = (b + d + 1) // 2 + 1
    if len(pairs) != expected:
        raise AssertionError(f"blocking placement built {len(pairs)} pairs, wanted {expected}")
    return AdversarialInstance(f"star_product_blocking({b},{d})", product, Pairing(pairs), "infeasible")


def cut_ok_not_pp(k: int, variant: str = "matched_clique", clique_size: int | None = None) -> AdversarialInstance:
    """Graphs that satisfy cut conditions yet are not k-path-pairable.

    variant "clique_tail": K_{1,k} with each leaf matched into K_N
    (N >= 2k); k+1 pairs load the whole star, the center paired across.
    variant "matched_clique": K_{1,k} joined to K_{k-1} by a matching of
    size k-1 avoiding the center, the leftover leaf attached to the first
    clique vertex; k pairs load the star.  In both, any path leaving the
    center devours both edges of some loaded leaf.
    """
    if variant == "clique_tail":
        if k < 2:
            raise ValueError("clique_tail needs k >= 2")
        n_clique = clique_size if clique_size is not None else 2 * k
        if n_clique < 2 * k:
            raise ValueError("clique_tail needs clique size N >= 2k")
        # center 0, leaves 1..k, clique k+1..k+n_clique
        center = 0
        leaves = list(range(1, k + 1))
        clique = list(range(k + 1, k + 1 + n_clique))
        edges = [(center, leaf) for leaf in leaves]
        edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]]
        edges += [(leaves[i], clique[i]) for i in range(k)]
        g = Graph(k + 1 + n_clique, edges, meta={"family": "cut_clique_tail", "k": k, "N": n_clique})
        pairs = [(center, clique[0])]
        pairs += [(leaves[i], clique[i + 1]) for i in range(k)]
        return AdversarialInstance(f"cut_ok_not_pp(clique_tail,k={k},N={n_clique})", g, Pairing(pairs), "infeasible")

    if variant == "matched_clique":
        if k < 6:
            raise ValueError("matched_clique satisfies the cut condition only for k >= 6")
        # center 0, leaves 1..k, clique k+1..2k-1 (size k-1)
        center = 0
        leaves = list(range(1, k + 1))
        clique = list(range(k + 1, 2 * k))
        edges = [(center, leaf) for leaf in leaves]
        edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]]
        edges += [(leaves[i], clique[i]) for i in range(k - 1)]
        edges.append((leaves[k - 1], clique[0]))  # leftover leaf to the first clique vertex
        g = Graph(2 * k, edges, meta={"family": "cut_matched_clique", "k": k})
        # k pairs: center across, one leaf-leaf pair, remaining leaves into the clique
        pairs = [(center, clique[-1]), (leaves[0], leaves[1])]
        pairs += [(leaves[2 + i], clique[i]) for i in range(k - 2)]
        return AdversarialInstance(f"cut_ok_not_pp(matched_clique,k={k})", g, Pairing(pairs), "infeasible")

    raise ValueError("variant must be 'clique_tail' or 'matched_clique'")


@dataclass(frozen=True)
class GridViolation:
    """Subgrid of a projective grid with more vertices than boundary edges.

    dims describes the box C_{2d} x ... x C_{2d} x C_{2d+1} inside an
    ambient torus large enough that no dimension wraps; size and boundary
    come from the closed-form counts.
    """

    dims: tuple[int, ...]
    size: int
    boundary: int

    def upper_bound(self) -> int:
        return self.size - 1


def grid_violating_subgrid(d: int) -> GridViolation:
    if d < 2:
        raise ValueError("grid violation needs dimension d >= 2")
    dims = tuple([2 * d] * (d - 1) + [2 * d + 1])
    size = (2 * d) ** (d - 1) * (2 * d + 1)
    boundary = 2 * ((d - 1) * (2 * d) ** (d - 2) * (2 * d + 1) + (2 * d) ** (d - 1))
    if not size > boundary:
        raise AssertionError("grid violation formulas must satisfy |S| > d(S)")
    return GridViolation(dims, size, boundary)
