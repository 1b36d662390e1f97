"""Group divisible designs and Wilson's fundamental construction.

Only the type g^3 family is built here (from the cyclic Latin square of
order g).  Other GDDs come in as JSON files and are validated on load.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .design import Design, VerificationReport, Violation, pair_counts, verify
from .errors import FormatError, GddError
from .graph import Graph

__all__ = ["Gdd", "verify_gdd", "gdd_g3", "to_json", "from_json", "wilson_fill"]


@dataclass(frozen=True)
class Gdd:
    k: int
    groups: tuple = field(default_factory=tuple)
    blocks: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(sorted(g)) for g in self.groups))
        object.__setattr__(self, "blocks", tuple(sorted(tuple(sorted(b)) for b in self.blocks)))

    @property
    def v(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def type_signature(self) -> tuple[tuple[int, int], ...]:
        """``((group size, multiplicity), ...)`` ascending by size, e.g. ``((10, 4),)``."""
        return tuple(sorted(Counter(len(g) for g in self.groups).items()))

    def type_string(self) -> str:
        return " ".join(f"{g}^{u}" for g, u in self.type_signature)


def verify_gdd(d: Gdd) -> VerificationReport:
    out = []
    v = d.v
    owner = {}
    for gi, group in enumerate(d.groups):
        if not group:
            out.append(Violation("empty-group", gi, 0, ">=1"))
        for x in group:
            if x in owner:
                out.append(Violation("group-overlap", x, 2, 1))
            owner.setdefault(x, gi)
    if set(owner) != set(range(v)):
        stray = sorted(set(owner) ^ set(range(v)))
        out.append(Violation("group-partition", tuple(stray), len(owner), v))

    for block in d.blocks:
        if len(block) != d.k or len(set(block)) != len(block):
            out.append(Violation("block-size", block, len(set(block)), d.k))
        stray = [x for x in block if x not in owner]
        if stray:
            out.append(Violation("ungrouped-point", block, stray[0], "a point of some group"))

    counts = pair_counts(d.blocks)
    for pair, c in sorted(counts.items()):
        i, j = pair
        if i in owner and owner.get(i) == owner.get(j):
            out.append(Violation("within-group", pair, c, 0))
    for i, j in combinations(range(v), 2):
        if owner.get(i) is None or owner.get(i) == owner.get(j):
            continue
        c = counts.get((i, j), 0)
        if c < 1:
            out.append(Violation("pair-undercovered", (i, j), c, 1))
        elif c > 1:
            out.append(Violation("pair-overcovered", (i, j), c, 1))
    return VerificationReport(tuple(out))


def gdd_g3(g: int) -> Gdd:
    """3-GDD of type g^3: block ``{i, g + j, 2g + (i + j) mod g}`` for all i, j."""
    if g < 1:
        raise ValueError(f"group size must be >= 1, got {g}")
    groups = (range(g), range(g, 2 * g), range(2 * g, 3 * g))
    blocks = [(i, g + j, 2 * g + (i + j) % g) for i in range(g) for j in range(g)]
    return Gdd(3, tuple(tuple(r) for r in groups), tuple(blocks))


def to_json(d: Gdd) -> str:
    return json.dumps({"k": d.k, "groups": [list(g) for g in d.groups], "blocks": [list(b) for b in d.blocks]})


def from_json(text: str) -> Gdd:
    """Parse and validate; an invalid GDD raises :class:`FormatError`."""
    try:
        obj = json.loads(text)
        d = Gdd(int(obj["k"]), tuple(tuple(int(x) for x in g) for g in obj["groups"]),
                tuple(tuple(int(x) for x in b) for b in obj["blocks"]))
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad GDD JSON: {exc}") from None
    report = verify_gdd(d)
    if not report.ok:
        first = report.violations[0]
        raise FormatError(f"invalid GDD ({len(report.violations)} violations, first: {first})")
    return d


def wilson_fill(d: Gdd, ingredients: Mapping[int, tuple[Design, Graph]]) -> tuple[Design, Graph]:
    """Overlay every group of ``d`` with the ingredient design of matching size.

    Ingredient point ``i`` lands on the ``i``-th smallest point of the group.
    The composed design is verified against the composed graph before it is
    returned.
    """
    deltas = {design.delta for design, _ in ingredients.values()}
    if len(deltas) > 1:
        raise GddError(f"ingredients mix degrees {sorted(deltas)}")
    blocks = list(d.blocks)
    edges = []
    delta = None
    for group in d.groups:
        size = len(group)
        if size not in ingredients:
            raise GddError(f"no ingredient design for group size {size}")
        design, graph = ingredients[size]
        if design.n != size or graph.n != size:
            raise GddError(f"ingredient for size {size} has {design.n} points")
        if design.delta + 1 != d.k:
            raise GddError(f"ingredient block size {design.delta + 1} differs from GDD block size {d.k}")
        delta = design.delta
        blocks.extend(tuple(group[x] for x in b) for b in design.blocks)
        edges.extend((group[u], group[v]) for u, v in graph.edges)
    if delta is None:
        delta = d.k - 1
    out = Design(d.v, delta, tuple(blocks))
    g = Graph(d.v, frozenset(tuple(sorted(e)) for e in edges))
    report = verify(out, g)
    if not report.ok:
        raise GddError("composed design fails verification:\n" + report.summary())
    return out, g
