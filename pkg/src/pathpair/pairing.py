"""Terminal pairings, path systems, the single-use edge ledger, and the verifier.

Only edges are capacitated: vertices may repeat within and across routes.
A route may degenerate to a single vertex when a router colocates a pair
internally, but a Pairing never contains a pair (v, v).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import norm_edge


class Pairing:
    """An indexed list of terminal pairs over pairwise-distinct vertices."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        pairs = tuple((int(x), int(y)) for x, y in pairs)
        seen: set[int] = set()
        for x, y in pairs:
            if x == y:
                raise ValueError(f"pair ({x}, {y}) has coinciding terminals")
            for t in (x, y):
                if t in seen:
                    raise ValueError(f"terminal {t} appears in more than one pair")
                seen.add(t)
        self.pairs = pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def terminals(self) -> set[int]:
        out: set[int] = set()
        for x, y in self.pairs:
            out.add(x)
            out.add(y)
        return out


class Path:
    """A walk with no repeated edge; a single vertex is a valid (empty) path."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[int]):
        if not vertices:
            raise ValueError("a path needs at least one vertex")
        self.vertices = tuple(int(v) for v in vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def __len__(self) -> int:
        return len(self.vertices)


class PathSystem:
    """One route per pair, index-aligned with the pairing."""

    __slots__ = ("routes",)

    def __init__(self, routes: Iterable[Sequence[int]]):
        self.routes = tuple(Path(r) if not isinstance(r, Path) else r for r in routes)

    def __len__(self) -> int:
        return len(self.routes)

    def __iter__(self):
        return iter(self.routes)

    def total_edges(self) -> int:
        return sum(len(r) - 1 for r in self.routes)


class LedgerConflict(Exception):
    """A path tried to claim an edge that is already consumed."""

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"edge {edge} already claimed")
        self.edge = edge


class EdgeLedger:
    """Single-use edge budget threaded through all routing phases.

    Bound to a host graph (anything with ``has_edge``); claims are atomic:
    a conflicting path claims nothing.
    """

    def __init__(self, graph):
        self.graph = graph
        self.used: set[tuple[int, int]] = set()

    def is_free(self, u: int, v: int) -> bool:
        return norm_edge(u, v) not in self.used

    def claim_edge(self, u: int, v: int) -> None:
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the host graph")
        e = norm_edge(u, v)
        if e in self.used:
            raise LedgerConflict(e)
        self.used.add(e)

    def claim_path(self, path: Path | Sequence[int]) -> None:
        """Claim every edge of the path, or claim nothing and raise LedgerConflict."""
        if not isinstance(path, Path):
            path = Path(path)
        edges = path.edges()
        for u, v in edges:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
        fresh: set[tuple[int, int]] = set()
        for e in edges:
            if e in self.used or e in fresh:
                raise LedgerConflict(e)
            fresh.add(e)
        self.used.update(fresh)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    """Machine-readable verification outcome; ok iff no failure entries."""

    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, kind: str, **detail) -> None:
        entry = {"kind": kind}
        entry.update(detail)
        self.failures.append(entry)

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def verify(graph, pairing, system) -> VerifyReport:
    """Certify a path system against a graph and pairing.

    Accepts Pairing/PathSystem objects or raw ``[[x, y], ...]`` /
    ``[[v0, v1, ...], ...]`` lists so that CLI inputs are checked rather
    than trusted.  Failure classes: ``pairing_invariant``,
    ``route_count_mismatch``, ``endpoint_mismatch``, ``non_edge_step``,
    ``duplicate_edge``, ``vertex_out_of_range``, ``empty_route``.
    """
    report = VerifyReport()
    pairs = list(pairing.pairs) if isinstance(pairing, Pairing) else [tuple(p) for p in pairing]
    routes = [list(r.vertices) for r in system.routes] if isinstance(system, PathSystem) else [list(r) for r in system]

    seen: set[int] = set()
    for i, pair in enumerate(pairs):
        if len(pair) != 2:
            report.add("pairing_invariant", pair_index=i, detail="pair is not a 2-tuple")
            continue
        x, y = pair
        if x == y:
            report.add("pairing_invariant", pair_index=i, detail=f"coinciding terminals {x}")
        for t in (x, y):
            if not (0 <= t < graph.n):
                report.add("vertex_out_of_range", pair_index=i, vertex=t)
            elif t in seen:
                report.add("pairing_invariant", pair_index=i, detail=f"terminal {t} repeated across pairs")
            seen.add(t)

    if len(routes) != len(pairs):
        report.add("route_count_mismatch", pairs=len(pairs), routes=len(routes))
        return report

    used: dict[tuple[int, int], int] = {}
    for i, (pair, route) in enumerate(zip(pairs, routes)):
        if len(pair) != 2:
            continue
        x, y = pair
        if not route:
            report.add("empty_route", pair_index=i)
            continue
        bad_vertex = False
        for v in route:
            if not (0 <= v < graph.n):
                report.add("vertex_out_of_range", pair_index=i, vertex=v)
                bad_vertex = True
        if bad_vertex:
            continue
        if route[0] != x or route[-1] != y:
            report.add(
                "endpoint_mismatch",
                pair_index=i,
                expected=[x, y],
                got=[route[0], route[-1]],
            )
        route_edges: set[tuple[int, int]] = set()
        for a, b in zip(route, route[1:]):
            if a == b or not graph.has_edge(a, b):
                report.add("non_edge_step", pair_index=i, step=[a, b])
                continue
            e = norm_edge(a, b)
            if e in route_edges:
                report.add("duplicate_edge", pair_index=i, edge=list(e), detail="repeated within one route")
                continue
            route_edges.add(e)
            if e in used:
                report.add(
                    "duplicate_edge",
                    pair_index=i,
                    edge=list(e),
                    detail=f"already used by route {used[e]}",
                )
            else:
                used[e] = i
    return report


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def pairing_to_json_dict(pairing: Pairing | Sequence) -> dict:
    pairs = pairing.pairs if isinstance(pairing, Pairing) else pairing
    return {"pairs": [list(p) for p in pairs]}


def pairing_from_json_dict(d: dict) -> Pairing:
    return Pairing([tuple(p) for p in d["pairs"]])


def system_to_json_dict(system: PathSystem, compact: bool = False) -> dict:
    """Plain format lists the vertices of every route; the compact 'delta'
    format stores each route as [v0, v1-v0, v2-v1, ...]."""
    if not compact:
        return {"format": "plain", "routes": [list(r.vertices) for r in system.routes]}
    routes = []
    for r in system.routes:
        vs = r.vertices
        routes.append([vs[0]] + [vs[i + 1] - vs[i] for i in range(len(vs) - 1)])
    return {"format": "delta", "routes": routes}


def system_from_json_dict(d: dict) -> PathSystem:
    fmt = d.get("format", "plain")
    if fmt == "plain":
        return PathSystem(d["routes"])
    if fmt == "delta":
        routes = []
        for enc in d["routes"]:
            vs = [enc[0]]
            for delta in enc[1:]:
                vs.append(vs[-1] + delta)
            routes.append(vs)
        return PathSystem(routes)
    raise ValueError(f"unknown path-system format {fmt!r}")
