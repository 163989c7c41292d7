"""Undirected simple graphs: representation, generators, Cartesian products, layers.

Vertices are dense integer indices 0..n-1.  Optional per-vertex labels carry
structured metadata (product coordinates, bipartite class tags) so that
routers can address vertices by semantics while verifiers work on raw
indices.  Graphs are immutable after construction and safe to share across
concurrent routing jobs.

Canonical vertex numbering of the generators (frozen; CLI output depends
on it):

* ``complete_graph(n)``        -- vertices 0..n-1, all pairs adjacent.
* ``complete_bipartite(a, b)`` -- class 1 is 0..a-1, class 2 is a..a+b-1;
  labels are ``(class, index_within_class)`` with class in {1, 2}.
* ``path_graph(k)``            -- 0-1-...-(k-1).
* ``cycle_graph(k)``           -- path_graph(k) plus the edge (k-1, 0); k >= 3.
* ``star_graph(n)``            -- center 0, leaves 1..n.
* ``hypercube(d)``             -- vertices are bitmasks 0..2^d-1, edges flip
  exactly one bit.
* ``cartesian_product(G, H)``  -- vertex (g, h) has index g*|V(H)| + h;
  labels are the coordinate tuples (g, h).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Normalize an undirected edge to (min, max) order."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph.

    ``edges`` is a frozenset of (min, max) index pairs.  ``labels`` is an
    optional tuple aligned with vertex indices.  ``meta`` carries free-form
    generator info (e.g. the family name) used by the CLI to pick layer
    solvers; it is not part of the graph identity.
    """

    __slots__ = ("n", "edges", "labels", "meta", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence] = None,
        meta: Optional[dict] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normed = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normed.add(norm_edge(u, v))
        self.n = n
        self.edges = frozenset(normed)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must align with vertex indices")
        self.labels = labels
        self.meta = dict(meta) if meta else None
        self._adj: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples per vertex (built lazily, cached)."""
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            self._adj = tuple(tuple(sorted(a)) for a in adj)
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges, meta={"family": "complete", "n": n})


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs a, b >= 1")
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    labels = [(1, i) for i in range(a)] + [(2, j) for j in range(b)]
    return Graph(a + b, edges, labels=labels, meta={"family": "complete_bipartite", "a": a, "b": b})


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("path graph needs k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    return Graph(k, edges, meta={"family": "path", "k": k})


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle graph needs k >= 3 (no multi-edges)")
    edges = [(i, (i + 1) % k) for i in range(k)]
    return Graph(k, edges, meta={"family": "cycle", "k": k})


def star_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("star graph needs n >= 1 leaves")
    edges = [(0, i) for i in range(1, n + 1)]
    return Graph(n + 1, edges, meta={"family": "star", "n": n})


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("hypercube dimension must be >= 0")
    n = 1 << d
    edges = [(v, v | (1 << bit)) for v in range(n) for bit in range(d) if not v & (1 << bit)]
    return Graph(n, edges, meta={"family": "hypercube", "d": d})


_FAMILIES = {
    "complete": (complete_graph, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "path": (path_graph, ("k",)),
    "cycle": (cycle_graph, ("k",)),
    "star": (star_graph, ("n",)),
    "hypercube": (hypercube, ("d",)),
}


def generate(family: str, **params: int) -> Graph:
    """Build a standard graph by family name; rejects unknown names and sizes."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choices: {sorted(_FAMILIES)}")
    fn, argnames = _FAMILIES[family]
    missing = [a for a in argnames if a not in params]
    if missing:
        raise ValueError(f"family {family!r} needs parameters {argnames}")
    extra = set(params) - set(argnames)
    if extra:
        raise ValueError(f"unexpected parameters {sorted(extra)} for family {family!r}")
    return fn(**params)


# ---------------------------------------------------------------------------
# Cartesian product and layers
# ---------------------------------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (x,u)~(y,v) iff x==y and uv in E(H), or xy in E(G) and u==v.

    Vertex (g_i, h_j) gets index g_i * |V(H)| + h_j; labels hold the
    coordinate pairs.
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("both factors must be nonempty")
    hn = h.n
    edges: list[Edge] = []
    for x in range(g.n):
        base = x * hn
        for u, v in h.edges:
            edges.append((base + u, base + v))
    for x, y in g.edges:
        for u in range(hn):
            edges.append((x * hn + u, y * hn + u))
    labels = [(x, u) for x in range(g.n) for u in range(hn)]
    return Graph(g.n * hn, edges, labels=labels, meta={"family": "product"})


@dataclass(frozen=True)
class LayerRef:
    """A layer of a Cartesian product: kind 'G' fixes the H-coordinate (anchor),
    kind 'H' fixes the G-coordinate."""

    kind: str  # "G" or "H"
    anchor: int

    def __post_init__(self):
        if self.kind not in ("G", "H"):
            raise ValueError("layer kind must be 'G' or 'H'")


def layer_subgraph(product: Graph, ref: LayerRef) -> tuple[Graph, list[int]]:
    """Extract a layer of a product graph.

    Returns (layer, embedding) where layer is isomorphic to the factor and
    embedding[i] is the product index of layer vertex i.  Requires product
    labels carrying coordinate pairs.
    """
    if product.labels is None:
        raise ValueError("product labels missing; graph was not built by cartesian_product")
    # A G-layer fixes the H-coordinate (label position 1); an H-layer fixes
    # the G-coordinate (position 0).  Layer vertices sort by the free one.
    fixed = 1 if ref.kind == "G" else 0
    free = 1 - fixed
    members = sorted(
        (lab[free], idx)
        for idx, lab in enumerate(product.labels)
        if lab[fixed] == ref.anchor
    )
    if not members:
        raise ValueError(f"anchor {ref.anchor} not present in the product labels")
    embedding = [idx for _, idx in members]
    back = {idx: i for i, idx in enumerate(embedding)}
    edges = [
        (back[u], back[v])
        for u, v in product.edges
        if u in back and v in back
    ]
    return Graph(len(embedding), edges), embedding


def edge_boundary(g: Graph, vertices: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in the given vertex set."""
    s = set(vertices)
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    count = 0
    for u, v in g.edges:
        if (u in s) != (v in s):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Serialization: JSON, DOT, edge list
# ---------------------------------------------------------------------------


def to_json_dict(g: Graph) -> dict:
    d: dict = {"n": g.n, "edges": sorted([list(e) for e in g.edges])}
    if g.labels is not None:
        d["labels"] = [list(lab) if isinstance(lab, tuple) else lab for lab in g.labels]
    if g.meta:
        d["meta"] = g.meta
    return d


def from_json_dict(d: dict) -> Graph:
    labels = d.get("labels")
    if labels is not None:
        labels = [tuple(lab) if isinstance(lab, list) else lab for lab in labels]
    return Graph(d["n"], [tuple(e) for e in d["edges"]], labels=labels, meta=d.get("meta"))


def dumps(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Graph:
    return from_json_dict(json.loads(text))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(g: Graph) -> str:
    """One 'u v' line per edge, sorted; a lone '# n <count>' header keeps
    isolated vertices recoverable."""
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    n = 0
    edges = []
    explicit_n = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n":
                explicit_n = int(parts[1])
            continue
        u, v = map(int, line.split())
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return Graph(explicit_n if explicit_n is not None else n, edges)
