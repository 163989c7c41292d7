"""Exact decision procedure for edge-disjoint pair routing on small graphs.

The solver backtracks over pairs, generating vertex-simple paths depth-first
over the residual edge set (shortcutting any route with a repeated vertex
never hurts, so completeness is preserved).  Iterative deepening on the
total path length makes the search complete once the cap reaches |E|:
every edge-disjoint system uses each edge at most once.

Infeasible is claimed only after an exhaustive sweep at the full cap;
running out of search-node budget is reported as BudgetExceeded, never as a
verdict.  All answers marked Feasible carry a PathSystem that passes
``pairing.verify``.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .graph import Graph
from .pairing import Pairing, PathSystem

_UNREACHABLE = -1


class Status(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleConfig:
    max_total_path_length: Optional[int] = None
    node_budget: int = 5_000_000
    pair_order: str = "shortest_first"  # or "given"

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.max_total_path_length is not None and self.max_total_path_length <= 0:
            raise ValueError("total path length cap must be positive")
        if self.pair_order not in ("shortest_first", "given"):
            raise ValueError("pair_order must be 'shortest_first' or 'given'")


@dataclass
class SolveOutcome:
    status: Status
    system: Optional[PathSystem]
    nodes_expanded: int


class _BudgetHit(Exception):
    pass


def _bfs_dist(adj, start: int, n: int) -> list[int]:
    dist = [_UNREACHABLE] * n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] == _UNREACHABLE:
                dist[w] = d
                queue.append(w)
    return dist


def _bfs_dist_residual(adj, used, start: int, n: int) -> list[int]:
    dist = [_UNREACHABLE] * n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] == _UNREACHABLE and _ekey(v, w) not in used:
                dist[w] = d
                queue.append(w)
    return dist


def _ekey(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _Searcher:
    def __init__(self, g: Graph, pairs: list[tuple[int, int]], order: list[int], budget: int):
        self.adj = g.adjacency()
        self.n = g.n
        self.pairs = pairs
        self.order = order
        self.budget = budget
        self.nodes = 0
        self.used: set[tuple[int, int]] = set()
        self.used_len = 0
        self.routes: dict[int, list[int]] = {}

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetHit()

    def search(self, cap: int) -> bool:
        self.used.clear()
        self.used_len = 0
        self.routes.clear()
        return self._route(0, cap)

    def _route(self, pos: int, cap: int) -> bool:
        self.tick()
        if pos == len(self.order):
            return True
        idx = self.order[pos]
        x, y = self.pairs[idx]
        dist_to_y = _bfs_dist_residual(self.adj, self.used, y, self.n)
        if dist_to_y[x] == _UNREACHABLE:
            return False
        # budget for this pair: leave room for static lower bounds downstream
        tail_lb = 0
        for later in self.order[pos + 1 :]:
            lx, ly = self.pairs[later]
            d = _bfs_dist_residual(self.adj, self.used, lx, self.n)[ly]
            if d == _UNREACHABLE:
                return False
            tail_lb += d
        budget_here = cap - self.used_len - tail_lb
        if dist_to_y[x] > budget_here:
            return False

        path = [x]
        on_path = {x}

        def extend(v: int, length: int) -> bool:
            self.tick()
            if v == y:
                self.routes[idx] = list(path)
                if self._route(pos + 1, cap):
                    return True
                del self.routes[idx]
                return False
            for w in self.adj[v]:
                if w in on_path:
                    continue
                e = _ekey(v, w)
                if e in self.used:
                    continue
                d = dist_to_y[w]
                if d == _UNREACHABLE or length + 1 + d > budget_here:
                    continue
                self.used.add(e)
                self.used_len += 1
                on_path.add(w)
                path.append(w)
                if extend(w, length + 1):
                    return True
                path.pop()
                on_path.remove(w)
                self.used_len -= 1
                self.used.remove(e)
            return False

        return extend(x, 0)


def solve_exact(g: Graph, pairing: Pairing, cfg: Optional[OracleConfig] = None) -> SolveOutcome:
    """Decide whether the pairing admits edge-disjoint routes; exact on
    completion, BudgetExceeded otherwise."""
    cfg = cfg or OracleConfig()
    if not isinstance(pairing, Pairing):
        pairing = Pairing(pairing)
    pairs = list(pairing.pairs)
    if not pairs:
        return SolveOutcome(Status.FEASIBLE, PathSystem([]), 0)
    for x, y in pairs:
        if not (0 <= x < g.n and 0 <= y < g.n):
            raise ValueError(f"terminal out of range in pair ({x}, {y})")

    adj = g.adjacency()
    base_dist = []
    for x, y in pairs:
        d = _bfs_dist(adj, x, g.n)[y]
        if d == _UNREACHABLE:
            return SolveOutcome(Status.INFEASIBLE, None, 0)
        base_dist.append(d)

    if cfg.pair_order == "shortest_first":
        order = sorted(range(len(pairs)), key=lambda i: (base_dist[i], i))
    else:
        order = list(range(len(pairs)))

    complete_cap = g.num_edges
    cap_limit = complete_cap if cfg.max_total_path_length is None else min(
        cfg.max_total_path_length, complete_cap
    )
    lower = sum(base_dist)
    if lower > cap_limit:
        status = Status.INFEASIBLE if cap_limit >= complete_cap else Status.BUDGET_EXCEEDED
        return SolveOutcome(status, None, 0)

    searcher = _Searcher(g, pairs, order, cfg.node_budget)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * (g.n + complete_cap) + 1000))
    try:
        for cap in range(lower, cap_limit + 1):
            try:
                if searcher.search(cap):
                    routes = [searcher.routes[i] for i in range(len(pairs))]
                    return SolveOutcome(Status.FEASIBLE, PathSystem(routes), searcher.nodes)
            except _BudgetHit:
                return SolveOutcome(Status.BUDGET_EXCEEDED, None, searcher.nodes)
    finally:
        sys.setrecursionlimit(old_limit)
    if cap_limit >= complete_cap:
        return SolveOutcome(Status.INFEASIBLE, None, searcher.nodes)
    # exhausted below the complete cap: not a proof of infeasibility
    return SolveOutcome(Status.BUDGET_EXCEEDED, None, searcher.nodes)


# ---------------------------------------------------------------------------
# Path-pairability decision
# ---------------------------------------------------------------------------


@dataclass
class PairabilityOutcome:
    status: Status  # FEASIBLE = k-path-pairable, INFEASIBLE = not (counterexample)
    counter_pairing: Optional[list[tuple[int, int]]]
    placements_checked: int
    nodes_expanded: int

    @property
    def is_pairable(self) -> Optional[bool]:
        if self.status == Status.FEASIBLE:
            return True
        if self.status == Status.INFEASIBLE:
            return False
        return None


def placements(n: int, k: int) -> Iterator[list[tuple[int, int]]]:
    """All placements of k disjoint unordered pairs on 0..n-1, canonical form:
    each pair (x, y) has x < y and pairs are listed with increasing x."""
    chosen: list[tuple[int, int]] = []
    used = [False] * n

    def unused_from(i: int) -> int:
        return sum(1 for j in range(i, n) if not used[j])

    def rec(i: int, remaining: int) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield list(chosen)
            return
        while i < n and used[i]:
            i += 1
        if i >= n or unused_from(i) < 2 * remaining:
            return
        # option 1: vertex i is not a terminal
        if unused_from(i + 1) >= 2 * remaining:
            yield from rec(i + 1, remaining)
        # option 2: vertex i is the smallest terminal of the next pair
        used[i] = True
        for y in range(i + 1, n):
            if used[y]:
                continue
            used[y] = True
            chosen.append((i, y))
            yield from rec(i + 1, remaining - 1)
            chosen.pop()
            used[y] = False
        used[i] = False

    yield from rec(0, k)


def is_k_path_pairable(g: Graph, k: int, cfg: Optional[OracleConfig] = None) -> PairabilityOutcome:
    """Check every canonical placement of k disjoint pairs.

    A single infeasible placement decides the question negatively even if
    other placements ran out of budget; budget exhaustion without a
    counterexample is reported as BUDGET_EXCEEDED.
    """
    cfg = cfg or OracleConfig()
    if k < 1:
        raise ValueError("k must be >= 1")
    if 2 * k > g.n:
        raise ValueError(f"need at least {2 * k} vertices for k={k}")
    checked = 0
    nodes = 0
    budget_hit = False
    for placement in placements(g.n, k):
        checked += 1
        outcome = solve_exact(g, Pairing(placement), cfg)
        nodes += outcome.nodes_expanded
        if outcome.status == Status.INFEASIBLE:
            return PairabilityOutcome(Status.INFEASIBLE, placement, checked, nodes)
        if outcome.status == Status.BUDGET_EXCEEDED:
            budget_hit = True
    if budget_hit:
        return PairabilityOutcome(Status.BUDGET_EXCEEDED, None, checked, nodes)
    return PairabilityOutcome(Status.FEASIBLE, None, checked, nodes)


@dataclass
class PpOutcome:
    """Largest verified k plus per-k verdicts; complete=False when a budget
    limit stopped the scan."""

    value: int
    verdicts: dict[int, bool] = field(default_factory=dict)
    complete: bool = True


def pp_number(g: Graph, k_max: int, cfg: Optional[OracleConfig] = None) -> PpOutcome:
    """Monotone scan for the path-pairability number up to k_max."""
    if k_max < 1 or 2 * k_max > g.n:
        raise ValueError("k_max must satisfy 1 <= k_max <= n/2")
    cfg = cfg or OracleConfig()
    verdicts: dict[int, bool] = {}
    value = 0
    for k in range(1, k_max + 1):
        outcome = is_k_path_pairable(g, k, cfg)
        if outcome.status == Status.BUDGET_EXCEEDED:
            return PpOutcome(value, verdicts, complete=False)
        pairable = outcome.status == Status.FEASIBLE
        if pairable and verdicts and not verdicts[k - 1]:
            raise AssertionError("monotonicity broke: k-pairable after (k-1) failed")
        verdicts[k] = pairable
        if not pairable:
            return PpOutcome(value, verdicts, complete=True)
        value = k
    return PpOutcome(value, verdicts, complete=True)
