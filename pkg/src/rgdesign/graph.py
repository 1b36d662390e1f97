"""Simple undirected graphs on points ``0..n-1``.

Generators for the graphs that host designs, the structural checks the
construction depends on (regularity, girth, connectivity) and the two text
interchange formats, graph6 and edge lists.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import FormatError, GraphError

__all__ = [
    "Graph",
    "make_graph",
    "cycle",
    "complete",
    "path",
    "disjoint_union",
    "generalized_petersen",
    "petersen",
    "sylvester",
    "hoffman_singleton",
    "regularity",
    "girth",
    "is_connected",
    "to_graph6",
    "from_graph6",
    "read_graph6_lines",
    "to_edge_list",
    "from_edge_list",
    "SYLVESTER_EDGES",
]


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside [0, {self.n})")
            edges.add(_pair(u, v))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, mapping) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``mapping[i]`` (a bijection onto ``range(n)``)."""
        return Graph(self.n, frozenset(_pair(mapping[u], mapping[v]) for u, v in self.edges))

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


# --------------------------------------------------------------------------
# generators

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, frozenset(_pair(i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"complete graph needs n >= 0, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertex-disjoint union; each operand is shifted past the ones before it."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle ``0..n-1``, spokes ``i -- n+i``, inner star ``n+i -- n+(i+k)``."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise GraphError(f"generalized_petersen needs n >= 3 and 1 <= k < n/2, got ({n}, {k})")
    edges = set()
    for i in range(n):
        edges.add(_pair(i, (i + 1) % n))
        edges.add((i, n + i))
        edges.add(_pair(n + i, n + (i + k) % n))
    return Graph(2 * n, frozenset(edges))


def petersen() -> Graph:
    return generalized_petersen(5, 2)


SYLVESTER_EDGES = (
    (0, 1), (0, 3), (0, 11), (0, 19), (0, 27), (1, 4), (1, 12), (1, 20), (1, 28),
    (2, 4), (2, 5), (2, 14), (2, 22), (2, 30), (3, 5), (3, 6), (3, 23), (3, 31),
    (4, 7), (4, 15), (4, 32), (5, 8), (5, 16), (5, 24), (6, 7), (6, 12), (6, 21),
    (6, 34), (7, 8), (7, 13), (7, 26), (8, 9), (8, 18), (8, 27), (9, 10), (9, 19),
    (9, 28), (9, 35), (10, 12), (10, 13), (10, 16), (10, 31), (11, 13), (11, 17), (11, 24),
    (11, 32), (12, 14), (12, 25), (13, 22), (13, 33), (14, 17), (14, 27), (14, 35), (15, 16),
    (15, 19), (15, 29), (15, 34), (16, 17), (16, 20), (17, 21), (17, 26), (18, 20), (18, 21),
    (18, 25), (18, 32), (19, 21), (19, 22), (20, 23), (20, 33), (21, 30), (22, 23), (22, 25),
    (23, 26), (23, 35), (24, 25), (24, 28), (24, 34), (25, 29), (26, 28), (26, 29), (27, 29),
    (27, 33), (28, 30), (29, 31), (30, 31), (30, 33), (31, 32), (32, 35), (33, 34), (34, 35),
)


def sylvester() -> Graph:
    return Graph(36, frozenset(SYLVESTER_EDGES))


def hoffman_singleton() -> Graph:
    """Pentagons ``P_h`` on points ``5h+j`` and pentagrams ``Q_i`` on ``25+5i+j``.

    ``P_h[j] ~ P_h[j+1]``, ``Q_i[j] ~ Q_i[j+2]`` and ``P_h[j] ~ Q_i[h*i+j]``,
    all indices mod 5.
    """
    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(_pair(5 * h + j, 5 * h + (j + 1) % 5))
            edges.add(_pair(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
            for i in range(5):
                edges.add((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph(50, frozenset(edges))


_GENERATORS = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "generalized_petersen": (generalized_petersen, 2),
    "petersen": (petersen, 0),
    "sylvester": (sylvester, 0),
    "hoffman_singleton": (hoffman_singleton, 0),
}


def make_graph(kind: str, params=()) -> Graph:
    """Build a named graph.

    ``disjoint_union`` takes its operands as ``params``: either graphs or
    ``(kind, params)`` pairs, which are built recursively.
    """
    if kind == "disjoint_union":
        parts = [p if isinstance(p, Graph) else make_graph(*p) for p in params]
        return disjoint_union(*parts)
    try:
        fn, arity = _GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    params = tuple(params)
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# --------------------------------------------------------------------------
# structure

def regularity(g: Graph) -> int | None:
    """The common degree if ``g`` is regular, else None.  The empty graph is 0-regular."""
    degrees = {len(a) for a in g.adjacency}
    if not degrees:
        return 0
    return degrees.pop() if len(degrees) == 1 else None


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    Breadth-first search from every vertex; a non-tree edge ``u -- v`` met
    from root ``r`` closes a closed walk of length ``d(u) + d(v) + 1`` that
    contains a cycle no longer than that, and the shortest cycle is found
    exactly from any of its vertices.
    """
    best = math.inf
    adj = g.adjacency
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


# --------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return _encode_n(g.n) + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise FormatError(f"graph6 record contains a byte outside 63..126: {text!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise FormatError(f"malformed graph6 size header: {text!r}")
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = [(x >> (5 - k)) & 1 for x in body for k in range(6)]
    if any(bits[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph | FormatError]:
    """Yield one graph per nonblank line; malformed records yield their FormatError."""
    for line in lines:
        if not line.strip():
            continue
        try:
            yield from_graph6(line)
        except FormatError as exc:
            yield exc


# --------------------------------------------------------------------------
# edge lists

def to_edge_list(g: Graph) -> str:
    return f"{g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def from_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line then one ``u v`` pair per line; ``#`` starts a comment line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"edge list must start with the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex index out of range in {ln!r} (n={n})")
        if u == v:
            raise FormatError(f"loop in {ln!r}")
        edges.append((u, v))
    return Graph(n, frozenset(edges))
