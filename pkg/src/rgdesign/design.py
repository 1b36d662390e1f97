"""Regular-graph designs with lambda = 1 and block size delta + 1.

A design for a delta-regular graph G covers every edge of G exactly twice and
every other pair exactly once.  When G has girth at least 5 the closed
neighbourhoods N[i] supply all the doubled pairs; the remaining *remainder
pairs* must be covered by extra *remainder blocks*.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import DimensionMismatch, FormatError, GirthTooSmall, NotRegular, RecoveryFailed
from .graph import Graph, girth, regularity

__all__ = [
    "Design",
    "DesignParams",
    "Violation",
    "VerificationReport",
    "PairTable",
    "params",
    "neighborhood_blocks",
    "remainder_pairs",
    "verify",
    "pair_table",
    "render_pair_table",
    "recover_graph",
    "trivial_design",
    "pair_counts",
    "remainder_degrees",
    "to_text",
    "from_text",
    "to_json",
    "from_json",
    "SYLVESTER_REMAINDER_BLOCKS",
]

# The twelve hand-built remainder blocks completing the Sylvester design.
SYLVESTER_REMAINDER_BLOCKS = (
    (0, 2, 10, 18, 26, 34), (0, 7, 16, 25, 30, 35), (1, 5, 13, 21, 29, 35),
    (1, 8, 17, 22, 31, 34), (2, 6, 9, 11, 20, 29), (3, 4, 9, 17, 25, 33),
    (3, 13, 14, 15, 18, 28), (4, 10, 21, 23, 24, 27), (5, 12, 19, 26, 32, 33),
    (6, 16, 22, 27, 28, 32), (7, 14, 19, 20, 24, 31), (8, 11, 12, 15, 23, 30),
)


@dataclass(frozen=True)
class Design:
    """Blocks on points ``0..n-1`` for a ``delta``-regular graph, lambda fixed at 1.

    Blocks are stored as sorted tuples and the block list is sorted, so two
    designs with the same blocks compare equal.  Block sizes and repeated
    blocks are *not* rejected here; :func:`verify` reports them.
    """

    n: int
    delta: int
    blocks: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0 or self.delta < 0:
            raise ValueError(f"n and delta must be nonnegative, got n={self.n}, delta={self.delta}")
        canon = []
        for b in self.blocks:
            block = tuple(sorted(set(b)))
            if block and (block[0] < 0 or block[-1] >= self.n):
                raise ValueError(f"block {tuple(b)} has a point outside [0, {self.n})")
            canon.append(block)
        canon.sort()
        object.__setattr__(self, "blocks", tuple(canon))

    lam = 1

    @property
    def k(self) -> int:
        return self.delta + 1

    @property
    def b(self) -> int:
        return len(self.blocks)

    def with_blocks(self, blocks: Iterable) -> "Design":
        return Design(self.n, self.delta, tuple(blocks))


@dataclass(frozen=True)
class DesignParams:
    n: int
    delta: int
    k: int
    b: int | None
    r: int | None
    remainder_count: int | None
    admissible: bool


def _div(a: int, b: int) -> int | None:
    return a // b if b and a % b == 0 else None


def params(n: int, delta: int) -> DesignParams:
    """Block size, block count, replication and remainder-block count for order ``n``.

    ``admissible`` is the conjunction ``n >= delta^2 + 1``,
    ``n = 1 (mod delta)`` and ``n(n + delta - 1) = 0 (mod delta(delta + 1))``.
    Counts are filled in whenever they are integers.
    """
    if delta < 0 or n < 1:
        raise ValueError(f"need delta >= 0 and n >= 1, got n={n}, delta={delta}")
    k = delta + 1
    if delta == 0:
        # only the empty design on K1
        ok = n == 1
        return DesignParams(n, 0, 1, 0 if ok else None, 0 if ok else None, 0 if ok else None, ok)
    d = delta * (delta + 1)
    b = _div(n * (n + delta - 1), d)
    r = _div(n - 1, delta)
    r = None if r is None else r + 1
    rem = _div(n * (n - delta * delta - 1), d) if n >= delta * delta + 1 else None
    ok = n >= delta * delta + 1 and (n - 1) % delta == 0 and n * (n + delta - 1) % d == 0
    return DesignParams(n, delta, k, b, r, rem, ok)


def _check_host(g: Graph) -> int:
    delta = regularity(g)
    if delta is None:
        raise NotRegular(f"{g!r} is not regular")
    gr = girth(g)
    if gr < 5:
        raise GirthTooSmall(f"{g!r} has girth {gr}; the neighbourhood construction needs girth >= 5")
    return delta


def neighborhood_blocks(g: Graph) -> list[tuple[int, ...]]:
    """The closed neighbourhoods ``N[i]``, one per vertex, in vertex order."""
    _check_host(g)
    return [tuple(sorted(g.neighbors(i) | {i})) for i in range(g.n)]


def remainder_pairs(g: Graph) -> set[tuple[int, int]]:
    """Pairs lying in no closed neighbourhood, i.e. at distance at least 3."""
    covered = set()
    for block in neighborhood_blocks(g):
        covered.update(combinations(block, 2))
    return {p for p in combinations(range(g.n), 2) if p not in covered}


def trivial_design(n: int, delta: int) -> tuple[Design, Graph]:
    """The degenerate cases delta = 0 (empty design on K1) and delta = 1.

    For delta = 1 the graph is a perfect matching ``{2i, 2i+1}`` and the
    blocks are its edges together with every pair of K_n, so each matching
    edge occurs as a block twice.
    """
    if delta == 0:
        if n != 1:
            raise ValueError(f"delta = 0 admits only n = 1, got n={n}")
        return Design(1, 0, ()), Graph(1)
    if delta == 1:
        if n < 2 or n % 2:
            raise ValueError(f"delta = 1 needs even n >= 2, got n={n}")
        matching = [(i, i + 1) for i in range(0, n, 2)]
        blocks = matching + list(combinations(range(n), 2))
        return Design(n, 1, tuple(blocks)), Graph(n, frozenset(matching))
    raise ValueError(f"trivial_design handles delta in {{0, 1}}, got {delta}")


# --------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class Violation:
    kind: str
    witness: object
    observed: object
    expected: object

    def __str__(self):
        return f"{self.kind} {self.witness} observed={self.observed} expected={self.expected}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def count(self, kind: str) -> int:
        return sum(1 for v in self.violations if v.kind == kind)

    def kinds(self) -> Counter:
        return Counter(v.kind for v in self.violations)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def pair_counts(blocks: Iterable) -> Counter:
    counts = Counter()
    for block in blocks:
        counts.update(combinations(sorted(block), 2))
    return counts


def verify(d: Design, g: Graph) -> VerificationReport:
    """Check ``d`` against ``g`` and list every violation with a witness.

    Raises :class:`DimensionMismatch` when the point counts differ or ``g``
    is not ``d.delta``-regular; every defect of the design itself is a
    report entry.
    """
    if d.n != g.n:
        raise DimensionMismatch(f"design has {d.n} points, graph has {g.n} vertices")
    if regularity(g) != d.delta:
        raise DimensionMismatch(f"graph is not {d.delta}-regular")

    out = []
    k = d.delta + 1
    for block in d.blocks:
        if len(block) != k:
            out.append(Violation("block-size", block, len(block), k))

    # a doubled block of size 2 is a doubled edge, which delta = 1 requires
    if d.delta >= 2:
        for block, c in sorted(Counter(d.blocks).items()):
            if c > 1:
                out.append(Violation("duplicate-block", block, c, 1))

    counts = pair_counts(d.blocks)
    for pair in combinations(range(d.n), 2):
        want = 2 if pair in g.edges else 1
        got = counts.get(pair, 0)
        if got < want:
            out.append(Violation("pair-undercovered", pair, got, want))
        elif got > want:
            out.append(Violation("pair-overcovered", pair, got, want))

    if d.delta:
        r = Fraction(d.n - 1, d.delta) + 1
        r = int(r) if r.denominator == 1 else r
        occ = Counter(x for block in d.blocks for x in block)
        for x in range(d.n):
            if occ[x] != r:
                out.append(Violation("replication", x, occ[x], r))
    return VerificationReport(tuple(out))


def remainder_degrees(d: Design, g: Graph) -> list[int]:
    """For each point, the number of partners it meets outside the neighbourhood blocks."""
    left = pair_counts(d.blocks) - pair_counts(neighborhood_blocks(g))
    deg = [0] * d.n
    for (i, j), c in left.items():
        deg[i] += c
        deg[j] += c
    return deg


# --------------------------------------------------------------------------
# pair occurrence tables

EDGE, NEIGHBOURHOOD, REMAINDER = "edge", "neighbourhood", "remainder"
_LABELS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class PairTable:
    n: int
    classes: dict

    def count(self, cls: str) -> int:
        return sum(1 for c in self.classes.values() if c == cls)


def pair_table(g: Graph) -> PairTable:
    """Classify every pair as a graph edge, a distance-2 pair or a remainder pair."""
    rem = remainder_pairs(g)
    classes = {}
    for pair in combinations(range(g.n), 2):
        if pair in g.edges:
            classes[pair] = EDGE
        elif pair in rem:
            classes[pair] = REMAINDER
        else:
            classes[pair] = NEIGHBOURHOOD
    return PairTable(g.n, classes)


def render_pair_table(t: PairTable) -> str:
    """Upper-triangular array: ``X`` for pairs inside neighbourhood blocks, ``-`` for remainder pairs."""
    if t.n > len(_LABELS):
        raise ValueError(f"pair tables are rendered for n <= {len(_LABELS)}")
    lines = [" " + "".join(" " + _LABELS[j] for j in range(1, t.n))]
    for i in range(t.n - 1):
        cells = []
        for j in range(1, t.n):
            if j <= i:
                cells.append("  ")
            else:
                cells.append(" -" if t.classes[(i, j)] == REMAINDER else " X")
        lines.append(_LABELS[i] + "".join(cells))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# recovery

def recover_graph(d: Design) -> Graph:
    """Read the host graph off a design: its edges are the pairs covered twice.

    The recovered graph must be ``d.delta``-regular with girth at least 5
    and ``d`` must verify against it.
    """
    counts = pair_counts(d.blocks)
    bad = [(p, c) for p, c in counts.items() if c not in (1, 2)]
    if bad:
        p, c = min(bad)
        raise RecoveryFailed(f"pair {p} is covered {c} times")
    missing = next((p for p in combinations(range(d.n), 2) if p not in counts), None)
    if missing is not None:
        raise RecoveryFailed(f"pair {missing} is not covered")
    g = Graph(d.n, frozenset(p for p, c in counts.items() if c == 2))
    if regularity(g) != d.delta:
        raise RecoveryFailed(f"doubled pairs do not form a {d.delta}-regular graph")
    if girth(g) < 5:
        raise RecoveryFailed(f"recovered graph has girth {girth(g)} < 5")
    report = verify(d, g)
    if not report.ok:
        raise RecoveryFailed("design fails verification against its recovered graph:\n" + report.summary())
    return g


# --------------------------------------------------------------------------
# file formats

def to_text(d: Design) -> str:
    return f"{d.n} {d.delta}\n" + "".join(" ".join(map(str, b)) + "\n" for b in d.blocks)


def from_text(text: str) -> Design:
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            rows.append([int(x) for x in ln.split()])
        except ValueError:
            raise FormatError(f"non-integer token in design line {ln!r}") from None
    if not rows or len(rows[0]) != 2:
        raise FormatError("design text must start with a line 'n delta'")
    n, delta = rows[0]
    try:
        return Design(n, delta, tuple(tuple(r) for r in rows[1:]))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def to_json(d: Design) -> str:
    return json.dumps({"n": d.n, "delta": d.delta, "blocks": [list(b) for b in d.blocks]})


def from_json(text: str) -> Design:
    try:
        obj = json.loads(text)
        return Design(int(obj["n"]), int(obj["delta"]), tuple(tuple(int(x) for x in b) for b in obj["blocks"]))
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad design JSON: {exc}") from None
