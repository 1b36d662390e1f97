"""Remainder pairs and the candidate remainder blocks that can cover them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..design import _check_host, remainder_pairs
from ..graph import Graph

__all__ = ["CandidateSet", "candidate_blocks", "remainder_graph"]


@dataclass(frozen=True)
class CandidateSet:
    """Blocks of size delta+1 all of whose pairs are remainder pairs.

    ``universe`` lists the remainder pairs in ascending order; ``candidates``
    holds ``(block, pairs)`` in lexicographic block order.
    """

    delta: int
    universe: tuple
    candidates: tuple

    def covered(self) -> set:
        return {p for _, pairs in self.candidates for p in pairs}

    def uncovered(self) -> list:
        cov = self.covered()
        return [p for p in self.universe if p not in cov]


def remainder_graph(g: Graph) -> list[set[int]]:
    """Adjacency of the graph whose edges are the remainder pairs of ``g``."""
    adj = [set() for _ in range(g.n)]
    for i, j in remainder_pairs(g):
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _cliques(adj: list[set[int]], size: int):
    """Cliques of the given size as ascending tuples, in lexicographic order."""

    def extend(clique, pool):
        if len(clique) == size:
            yield tuple(clique)
            return
        for v in sorted(pool):
            clique.append(v)
            yield from extend(clique, {w for w in pool if w > v} & adj[v])
            clique.pop()

    yield from extend([], set(range(len(adj))))


def candidate_blocks(g: Graph) -> CandidateSet:
    delta = _check_host(g)
    adj = remainder_graph(g)
    universe = tuple(sorted((i, j) for i in range(g.n) for j in adj[i] if i < j))
    if delta == 0:
        return CandidateSet(0, universe, ())
    cands = tuple((q, tuple(combinations(q, 2))) for q in _cliques(adj, delta + 1))
    return CandidateSet(delta, universe, cands)
