"""Completion and refutation of designs on a given graph.

``exact_cover`` completes the neighbourhood blocks with remainder blocks or
proves no completion exists.  Algorithms A to D are the cheaper refutation
tests: coverage of the remainder pairs (A), the 0/1 system M d = j (B), and
the partition tests around a single point for n = (delta+1)^2 (C) and for
3-regular graphs on 22 vertices (D).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from ..design import Design, _check_host, neighborhood_blocks, verify
from ..errors import PreconditionViolated
from ..graph import Graph
from .candidates import CandidateSet, candidate_blocks
from .certificate import weight_certificate
from .cover import BudgetExceeded, ExactCover

__all__ = [
    "Status",
    "SearchOutcome",
    "CoverInstance",
    "algorithm_a",
    "algorithm_b",
    "algorithm_c",
    "algorithm_d",
    "exact_cover",
    "cover_instance",
    "triple_partitions",
    "ALGORITHMS",
]


class Status(str, enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    stage: str
    design: Design | None = None
    witness: object = None
    nodes: int = 0
    count: int | None = None
    note: str = ""
    certificate: tuple | None = None  # integer pair weights, when refuted by weighting

    @property
    def decisive(self) -> bool:
        return self.status is not Status.INCONCLUSIVE

    def describe(self) -> str:
        parts = [str(self.status), f"stage={self.stage}"]
        if self.witness is not None:
            parts.append(f"witness={_fmt(self.witness)}")
        if self.count is not None:
            parts.append(f"count={self.count}")
        parts.append(f"nodes={self.nodes}")
        if self.note:
            parts.append(f"note={self.note!r}")
        return " ".join(parts)


def _fmt(w) -> str:
    if isinstance(w, tuple) and len(w) == 2 and all(isinstance(x, int) for x in w):
        return "{%d,%d}" % w
    return str(w)


def _completed(g: Graph, delta: int, blocks) -> Design:
    d = Design(g.n, delta, tuple(neighborhood_blocks(g)) + tuple(blocks))
    report = verify(d, g)
    if not report.ok:
        raise AssertionError("search produced an invalid design:\n" + report.summary())
    return d


# --------------------------------------------------------------------------
# A

def _witness(pairs):
    """Reported uncoverable pair: smallest first point, then its farthest partner."""
    return min(pairs, key=lambda p: (p[0], -p[1]))


def algorithm_a(g: Graph, cands: CandidateSet | None = None) -> SearchOutcome:
    """Refute when some remainder pair lies in no candidate block."""
    cands = cands or candidate_blocks(g)
    missing = cands.uncovered()
    if missing:
        return SearchOutcome(Status.NOT_EXISTS, "A", witness=_witness(missing),
                             note=f"{len(missing)} remainder pairs lie in no candidate block")
    return SearchOutcome(Status.INCONCLUSIVE, "A")


# --------------------------------------------------------------------------
# exact cover

def _cover_rows(cands: CandidateSet) -> list[list[int]]:
    index = {p: t for t, p in enumerate(cands.universe)}
    return [[index[p] for p in pairs] for _, pairs in cands.candidates]


def exact_cover(g: Graph, mode: str = "decide", budget: int | None = None,
                cands: CandidateSet | None = None, certify: bool = True) -> SearchOutcome:
    """Cover every remainder pair exactly once with candidate blocks.

    ``mode`` is ``decide`` or ``first`` (both stop at the first completion and
    attach the verified design) or ``count`` (number of distinct sets of
    remainder blocks).  Running out of ``budget`` search nodes gives an
    Inconclusive outcome.

    Before backtracking, a weight certificate is sought: integer pair
    weights under which every candidate weighs >= 0 but all remainder pairs
    together weigh < 0.  It settles counting obstructions such as C7+C10
    instantly, where plain backtracking needs tens of millions of nodes.
    """
    if mode not in ("decide", "first", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    delta = _check_host(g)
    cands = cands or candidate_blocks(g)
    rows = _cover_rows(cands)
    weights = weight_certificate(len(cands.universe), rows) if certify else None
    if weights is not None:
        return SearchOutcome(Status.NOT_EXISTS, "cover", count=0 if mode == "count" else None,
                             witness=f"pair weights sum to {sum(weights)} while every candidate weighs >= 0",
                             certificate=tuple(weights))
    solver = ExactCover(len(cands.universe), rows, budget)
    try:
        if mode == "count":
            n = solver.count()
            status = Status.EXISTS if n else Status.NOT_EXISTS
            return SearchOutcome(status, "cover", count=n, nodes=solver.nodes)
        sol = solver.first()
    except BudgetExceeded as exc:
        return SearchOutcome(Status.INCONCLUSIVE, "cover", nodes=solver.nodes, note=str(exc))
    if sol is None:
        return SearchOutcome(Status.NOT_EXISTS, "cover", nodes=solver.nodes,
                             witness="search tree exhausted")
    design = _completed(g, delta, [cands.candidates[r][0] for r in sol])
    return SearchOutcome(Status.EXISTS, "cover", design=design, nodes=solver.nodes)


# --------------------------------------------------------------------------
# B

@dataclass(frozen=True)
class CoverInstance:
    """Rows are remainder pairs, columns are candidate blocks, ``M[t, k] = 1`` iff pair t lies in block k."""

    rows: tuple
    columns: tuple
    incidence: np.ndarray = field(repr=False)

    @property
    def target(self) -> np.ndarray:
        return np.ones(len(self.rows), dtype=np.int64)

    def satisfied_by(self, d) -> bool:
        return bool(np.array_equal(self.incidence.astype(np.int64) @ np.asarray(d, dtype=np.int64), self.target))


def cover_instance(cands: CandidateSet) -> CoverInstance:
    M = np.zeros((len(cands.universe), len(cands.candidates)), dtype=np.uint8)
    index = {p: t for t, p in enumerate(cands.universe)}
    for k, (_, pairs) in enumerate(cands.candidates):
        for p in pairs:
            M[index[p], k] = 1
    return CoverInstance(cands.universe, tuple(q for q, _ in cands.candidates), M)


def algorithm_b(g: Graph, budget: int | None = None) -> SearchOutcome:
    """Decide whether some 0/1 vector d solves M d = j."""
    delta = _check_host(g)
    inst = cover_instance(candidate_blocks(g))
    row_sums = inst.incidence.sum(axis=1)
    empty = np.flatnonzero(row_sums == 0)
    if empty.size:
        return SearchOutcome(Status.NOT_EXISTS, "B", witness=_witness([inst.rows[int(t)] for t in empty]),
                             note="coverage pre-check")
    columns = [np.flatnonzero(inst.incidence[:, k]).tolist() for k in range(len(inst.columns))]
    solver = ExactCover(len(inst.rows), columns, budget)
    try:
        sol = solver.first()
    except BudgetExceeded as exc:
        return SearchOutcome(Status.INCONCLUSIVE, "B", nodes=solver.nodes, note=str(exc))
    if sol is None:
        return SearchOutcome(Status.NOT_EXISTS, "B", nodes=solver.nodes, witness="M d = j has no 0/1 solution")
    d = np.zeros(len(inst.columns), dtype=np.int64)
    d[sol] = 1
    assert inst.satisfied_by(d)
    design = _completed(g, delta, [inst.columns[k] for k in sol])
    return SearchOutcome(Status.EXISTS, "B", design=design, nodes=solver.nodes)


# --------------------------------------------------------------------------
# C and D

def _remainder_adj(cands: CandidateSet, n: int) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for i, j in cands.universe:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _valid_part(adj, part) -> bool:
    """Every pair inside ``part`` is an (unused) remainder pair."""
    return all(b in adj[a] for a, b in combinations(part, 2))


def algorithm_c(g: Graph) -> SearchOutcome:
    """Split the 2*delta remainder partners of point 0 into two blocks, for n = (delta+1)^2."""
    delta = _check_host(g)
    if g.n != (delta + 1) ** 2:
        raise PreconditionViolated(f"algorithm C needs n = (delta+1)^2 = {(delta + 1) ** 2}, got n={g.n}")
    cands = candidate_blocks(g)
    adj = _remainder_adj(cands, g.n)
    T = sorted(adj[0])
    if len(T) != 2 * delta:
        raise AssertionError(f"point 0 has {len(T)} remainder partners, expected {2 * delta}")
    examined = 0
    first, rest = T[0], T[1:]
    for others in combinations(rest, delta - 1):
        examined += 1
        T1 = (first,) + others
        T2 = tuple(x for x in rest if x not in others)
        if _valid_part(adj, T1) and _valid_part(adj, T2):
            return SearchOutcome(Status.INCONCLUSIVE, "C", witness=(T1, T2), nodes=examined,
                                 note="a valid split of T exists")
    assert examined == comb(2 * delta, delta) // 2
    return SearchOutcome(Status.NOT_EXISTS, "C", witness=f"partitions={examined}", nodes=examined)


def triple_partitions(T, ok=None):
    """Partitions of ``T`` into triples, canonically ordered.

    Each triple is sorted and triples appear in increasing order of their
    first element.  ``ok``, when given, prunes triples it rejects.
    """
    T = sorted(T)
    if len(T) % 3:
        raise ValueError("set size must be a multiple of 3")

    def rec(pool):
        if not pool:
            yield ()
            return
        a, rest = pool[0], pool[1:]
        for b, c in combinations(rest, 2):
            triple = (a, b, c)
            if ok is not None and not ok(triple):
                continue
            left = [x for x in rest if x != b and x != c]
            for tail in rec(left):
                yield (triple,) + tail

    yield from rec(T)


def algorithm_d(g: Graph) -> SearchOutcome:
    """Two-level partition test for 3-regular graphs on 22 vertices.

    Level one splits the 12 remainder partners of point 0 into four triples
    that each extend point 0 to a valid block.  Every success is followed
    by the same test at the smallest point outside ``{0} | T`` with the
    pairs already used removed.  If every branch dies, no design exists.
    """
    delta = _check_host(g)
    if g.n != 22 or delta != 3:
        raise PreconditionViolated(f"algorithm D needs a 3-regular graph on 22 vertices, got n={g.n}, delta={delta}")
    cands = candidate_blocks(g)
    adj = _remainder_adj(cands, g.n)
    t = 0
    T = sorted(adj[t])
    if len(T) != 12:
        raise AssertionError(f"point 0 has {len(T)} remainder partners, expected 12")
    t2 = min(x for x in range(1, g.n) if x not in T)

    first_level = 0
    examined = 0
    for partition in triple_partitions(T, ok=lambda q: _valid_part(adj, q)):
        first_level += 1
        used = {p for q in partition for p in combinations(sorted((t,) + q), 2)}
        adj2 = [{w for w in adj[v] if (min(v, w), max(v, w)) not in used} for v in range(g.n)]
        T2 = sorted(adj2[t2])
        for second in triple_partitions(T2, ok=lambda q: _valid_part(adj2, q)):
            examined += 1
            return SearchOutcome(Status.INCONCLUSIVE, "D", witness=(partition, second),
                                 nodes=first_level + examined,
                                 note=f"second iteration at point {t2} survives")
    return SearchOutcome(Status.NOT_EXISTS, "D", nodes=first_level,
                         witness=f"first-level splits={first_level}, all refuted at point {t2}"
                         if first_level else "no valid first-level split")


ALGORITHMS = {
    "a": lambda g, budget=None: algorithm_a(g),
    "b": algorithm_b,
    "c": lambda g, budget=None: algorithm_c(g),
    "d": lambda g, budget=None: algorithm_d(g),
    "cover": lambda g, budget=None: exact_cover(g, "decide", budget),
}
