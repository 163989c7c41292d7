"""Independent reference implementations used only to cross-check the package.

These deliberately take different algorithmic routes from the shipped code:
matching by brute-force subset enumeration, routing by full path
enumeration plus exact-cover backtracking over path combinations.
"""

from itertools import combinations


def brute_force_max_matching_size(adj, left_n, right_n):
    """Largest matching size by trying all left subsets; exponential, tiny inputs only."""
    best = 0
    adj_sets = [set(a) for a in adj]
    for size in range(min(left_n, right_n), 0, -1):
        for lefts in combinations(range(left_n), size):
            if _has_perfect_on(adj_sets, lefts):
                return size
    return best


def _has_perfect_on(adj_sets, lefts):
    lefts = list(lefts)

    def rec(i, taken):
        if i == len(lefts):
            return True
        for r in adj_sets[lefts[i]]:
            if r not in taken:
                taken.add(r)
                if rec(i + 1, taken):
                    return True
                taken.remove(r)
        return False

    return rec(0, set())


def enumerate_simple_paths(graph, start, end, max_len=None):
    """All vertex-simple paths between two vertices as vertex lists."""
    adj = graph.adjacency()
    limit = max_len if max_len is not None else graph.n
    out = []
    path = [start]
    on_path = {start}

    def rec(v):
        if v == end:
            out.append(list(path))
            return
        if len(path) - 1 >= limit:
            return
        for w in adj[v]:
            if w not in on_path:
                on_path.add(w)
                path.append(w)
                rec(w)
                path.pop()
                on_path.remove(w)

    rec(start)
    return out


def path_cover_feasible(graph, pairs):
    """Second-opinion routing decision: enumerate every pair's simple paths up
    front, then backtrack over combinations checking edge-disjointness."""

    def edge_set(path):
        return frozenset(
            (min(a, b), max(a, b)) for a, b in zip(path, path[1:])
        )

    candidates = []
    for x, y in pairs:
        paths = enumerate_simple_paths(graph, x, y)
        if not paths:
            return False
        candidates.append(sorted((edge_set(p) for p in paths), key=sorted))

    order = sorted(range(len(pairs)), key=lambda i: len(candidates[i]))

    def rec(pos, used):
        if pos == len(order):
            return True
        for edges in candidates[order[pos]]:
            if used & edges:
                continue
            if rec(pos + 1, used | edges):
                return True
        return False

    return rec(0, frozenset())
