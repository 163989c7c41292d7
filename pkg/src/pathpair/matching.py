"""Bipartite maximum matching (Hopcroft-Karp) and Hall-violator extraction.

Deterministic: adjacency is kept sorted and all search loops scan ascending
vertex indices, so the same input always yields the same matching.  All
functions are pure over immutable inputs and safe to call concurrently.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

_INF = -1  # sentinel distance, matches "unreached"


class BipartiteGraph:
    """Left/right vertex classes with adjacency from left to right."""

    __slots__ = ("left_n", "right_n", "adj")

    def __init__(self, left_n: int, right_n: int, adj: Sequence[Iterable[int]]):
        if len(adj) != left_n:
            raise ValueError("adjacency must have one entry per left vertex")
        self.left_n = left_n
        self.right_n = right_n
        self.adj: list[tuple[int, ...]] = []
        for neighbors in adj:
            ns = tuple(sorted(set(neighbors)))
            if ns and (ns[0] < 0 or ns[-1] >= right_n):
                raise ValueError("adjacency target out of range")
            self.adj.append(ns)


def max_matching(b: BipartiteGraph) -> dict[int, int]:
    """Maximum-cardinality matching as a left -> right partial map (Hopcroft-Karp)."""
    match_l = [-1] * b.left_n
    match_r = [-1] * b.right_n
    dist = [0] * b.left_n
    adj = b.adj

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(b.left_n):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for r in adj[u]:
                w = match_r[r]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for r in adj[u]:
            w = match_r[r]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = r
                match_r[r] = u
                return True
        dist[u] = _INF
        return False

    # Augmenting-path depth is one phase length, which Hopcroft-Karp keeps
    # small, but raise the recursion limit for adversarial chains anyway.
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * (b.left_n + b.right_n) + 1000))
    try:
        while bfs():
            for u in range(b.left_n):
                if match_l[u] == -1:
                    dfs(u)
    finally:
        sys.setrecursionlimit(old_limit)
    return {u: r for u, r in enumerate(match_l) if r != -1}


@dataclass(frozen=True)
class HallViolator:
    """A left set whose neighborhood is strictly smaller, certifying that no
    perfect matching exists."""

    left_set: tuple[int, ...]


def neighborhood(b: BipartiteGraph, left_set: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for u in left_set:
        out.update(b.adj[u])
    return out


def perfect_or_witness(b: BipartiteGraph):
    """Either a perfect matching (dict) or a HallViolator.

    Requires equal class sizes.  The violator is the set of left vertices
    reachable by alternating paths from the unmatched ones; its neighborhood
    consists entirely of matched right vertices whose partners are inside
    the set, hence |N(W)| = |W| - (#unmatched in W) < |W|.
    """
    if b.left_n != b.right_n:
        raise ValueError("perfect_or_witness needs equal class sizes")
    matching = max_matching(b)
    if len(matching) == b.left_n:
        return matching
    match_r = [-1] * b.right_n
    for u, r in matching.items():
        match_r[r] = u
    reachable = {u for u in range(b.left_n) if u not in matching}
    queue = deque(sorted(reachable))
    while queue:
        u = queue.popleft()
        for r in b.adj[u]:
            w = match_r[r]
            if w != -1 and w not in reachable:
                reachable.add(w)
                queue.append(w)
    return HallViolator(tuple(sorted(reachable)))


# ---------------------------------------------------------------------------
# Capacitated right side
# ---------------------------------------------------------------------------


def replicate_right(adj: Sequence[Iterable[int]], right_n: int, capacity: int) -> BipartiteGraph:
    """Expand a capacitated right side into `capacity` independent slot
    vertices per right vertex (slot r*capacity+k).  Small instances only;
    assign_with_capacities is the scalable equivalent."""
    out = []
    for neighbors in adj:
        slots = []
        for r in sorted(set(neighbors)):
            slots.extend(r * capacity + k for k in range(capacity))
        out.append(slots)
    return BipartiteGraph(len(adj), right_n * capacity, out)


def assign_with_capacities(
    adj: Sequence[Sequence[int]],
    right_n: int,
    capacity: Sequence[int],
) -> list[Optional[int]]:
    """Maximum assignment of left vertices to capacitated right vertices.

    Equivalent to max_matching on the slot-replicated graph but without
    materializing slots.  Returns one right vertex (or None) per left
    vertex; the assignment is maximum-cardinality and deterministic.
    """
    load = [0] * right_n
    holders: list[list[int]] = [[] for _ in range(right_n)]
    assign: list[Optional[int]] = [None] * len(adj)

    def place(u: int, r: int) -> None:
        assign[u] = r
        load[r] += 1
        holders[r].append(u)

    # greedy seed pass
    for u in range(len(adj)):
        for r in adj[u]:
            if load[r] < capacity[r]:
                place(u, r)
                break

    # BFS augmentation for the leftovers: alternate left -> right -> holder
    for u in range(len(adj)):
        if assign[u] is not None:
            continue
        parent_right: dict[int, int] = {}  # right -> left that reached it
        queue = deque([u])
        seen_left = {u}
        free_right = -1
        while queue and free_right == -1:
            cur = queue.popleft()
            for r in adj[cur]:
                if r in parent_right:
                    continue
                parent_right[r] = cur
                if load[r] < capacity[r]:
                    free_right = r
                    break
                for holder in holders[r]:
                    if holder not in seen_left:
                        seen_left.add(holder)
                        queue.append(holder)
        if free_right == -1:
            continue  # no augmenting path; u stays unassigned
        # walk back flipping assignments
        r = free_right
        while True:
            left = parent_right[r]
            prev = assign[left]
            assign[left] = r
            holders[r].append(left)
            load[r] += 1
            if prev is None:
                break
            holders[prev].remove(left)
            load[prev] -= 1
            r = prev
    return assign
