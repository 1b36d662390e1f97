"""Random delta-regular graphs with girth at least 5."""
from __future__ import annotations

import random
from collections import Counter

from ..errors import GenerationFailed
from ..graph import Graph, girth, regularity

__all__ = ["random_regular_girth5", "short_cycle_defect"]


def _random_regular(n: int, delta: int, rng: random.Random, tries: int = 200) -> list[set[int]] | None:
    """Pair stubs at random, avoiding loops and repeated edges; restart when stuck."""
    for _ in range(tries):
        adj = [set() for _ in range(n)]
        stubs = [v for v in range(n) for _ in range(delta)]
        rng.shuffle(stubs)
        stuck = False
        while stubs:
            u = stubs.pop()
            options = [i for i, v in enumerate(stubs) if v != u and v not in adj[u]]
            if not options:
                stuck = True
                break
            v = stubs.pop(rng.choice(options))
            adj[u].add(v)
            adj[v].add(u)
        if not stuck:
            return adj
    return None


def short_cycle_defect(adj: list[set[int]]) -> int:
    """Zero iff the graph has no triangle and no 4-cycle.

    Counts, over paths ``a - w - b``, the surplus of common neighbours:
    pairs with two or more common neighbours (4-cycles) and adjacent pairs
    with any common neighbour (triangles).
    """
    common = Counter()
    for nbrs in adj:
        s = sorted(nbrs)
        for i, a in enumerate(s):
            for b in s[i + 1:]:
                common[(a, b)] += 1
    bad = 0
    for (a, b), c in common.items():
        bad += c - 1
        if b in adj[a]:
            bad += 1
    return bad


def random_regular_girth5(n: int, delta: int, seed: int, max_restarts: int = 50,
                          max_swaps: int = 20000) -> Graph:
    """A random ``delta``-regular graph on ``n`` vertices with girth >= 5.

    Starts from a random pairing, then performs double-edge swaps
    ``{a,b},{c,d} -> {a,c},{b,d}`` that do not increase the short-cycle
    defect, always touching an edge on a short cycle.  Fixed seed, fixed
    output.
    """
    if delta < 0 or n < 1 or (n * delta) % 2:
        raise GenerationFailed(f"no {delta}-regular graph on {n} vertices")
    if delta >= 2 and n < delta * delta + 1:
        raise GenerationFailed(f"a {delta}-regular graph with girth >= 5 needs at least {delta * delta + 1} vertices")
    if delta >= n:
        raise GenerationFailed(f"degree {delta} too large for {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        adj = _random_regular(n, delta, rng)
        if adj is None:
            continue
        defect = short_cycle_defect(adj)
        for _ in range(max_swaps):
            if defect == 0:
                break
            edges = sorted((u, v) for u in range(n) for v in adj[u] if u < v)
            bad = [e for e in edges if _on_short_cycle(adj, *e)]
            a, b = rng.choice(bad)
            c, d = rng.choice(edges)
            if rng.random() < 0.5:
                c, d = d, c
            if len({a, b, c, d}) < 4 or c in adj[a] or d in adj[b]:
                continue
            _swap(adj, a, b, c, d)
            new = short_cycle_defect(adj)
            if new <= defect:
                defect = new
            else:
                _swap(adj, a, c, b, d)
        if defect == 0:
            g = Graph(n, frozenset((u, v) for u in range(n) for v in adj[u] if u < v))
            assert regularity(g) == delta and girth(g) >= 5
            return g
    raise GenerationFailed(f"no {delta}-regular girth-5 graph on {n} vertices after {max_restarts} restarts")


def _on_short_cycle(adj, u, v) -> bool:
    if adj[u] & adj[v]:
        return True
    # 4-cycle u - v - x - y - u
    return any(adj[x] & (adj[u] - {v}) - {u, v} for x in adj[v] - {u})


def _swap(adj, a, b, c, d):
    """Replace edges {a,b} and {c,d} with {a,c} and {b,d}."""
    adj[a].discard(b)
    adj[b].discard(a)
    adj[c].discard(d)
    adj[d].discard(c)
    adj[a].add(c)
    adj[c].add(a)
    adj[b].add(d)
    adj[d].add(b)
