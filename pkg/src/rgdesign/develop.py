"""Cyclic development of base blocks under ``x -> x + s (mod n)``.

The published base-block tables ship as ``data/base_blocks.txt``; the file
is checked against a SHA-256 digest on first load.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd

from .design import Design
from .errors import DuplicateBlock, FormatError, UnknownTable

__all__ = [
    "BaseBlockSet",
    "orbit",
    "orbit_length",
    "is_short_orbit",
    "develop",
    "builtin_table",
    "builtin_orders",
    "to_text",
    "from_text",
    "FAMILIES",
]

FAMILIES = ("delta2", "delta3", "delta4")
_TABLES_SHA256 = "53eac2161f0d97e79337c493bc8c2b70fe57d73405ab3a870c07f5d658c859bd"


@dataclass(frozen=True)
class BaseBlockSet:
    n: int
    s: int
    base_blocks: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.s <= self.n:
            raise ValueError(f"need n >= 1 and 1 <= s <= n, got n={self.n}, s={self.s}")
        blocks = []
        for b in self.base_blocks:
            block = tuple(sorted(set(b)))
            if len(block) != len(tuple(b)):
                raise ValueError(f"base block {tuple(b)} repeats a point")
            if block and (block[0] < 0 or block[-1] >= self.n):
                raise ValueError(f"base block {tuple(b)} has a point outside [0, {self.n})")
            blocks.append(block)
        if len({len(b) for b in blocks}) > 1:
            raise ValueError("base blocks have different sizes")
        object.__setattr__(self, "base_blocks", tuple(blocks))

    @property
    def block_size(self) -> int:
        return len(self.base_blocks[0]) if self.base_blocks else 0

    @property
    def full_orbit(self) -> int:
        """Length of an orbit with trivial stabiliser, ``n / gcd(n, s)``."""
        return self.n // gcd(self.n, self.s)

    def short_orbits(self) -> list[tuple[int, ...]]:
        return [b for b in self.base_blocks if is_short_orbit(b, self.n, self.s)]


def orbit(block, n: int, s: int) -> list[tuple[int, ...]]:
    """Distinct translates of ``block`` by multiples of ``s``, starting with ``block`` itself."""
    start = frozenset(x % n for x in block)
    out = [tuple(sorted(start))]
    cur = start
    while True:
        cur = frozenset((x + s) % n for x in cur)
        if cur == start:
            return out
        out.append(tuple(sorted(cur)))


def orbit_length(block, n: int, s: int) -> int:
    return len(orbit(block, n, s))


def is_short_orbit(block, n: int, s: int) -> bool:
    return orbit_length(block, n, s) < n // gcd(n, s)


def develop(bbs: BaseBlockSet) -> Design:
    """Union of the orbits of all base blocks.

    Two base blocks landing on a common block, or one base block meeting a
    translate of itself that is not its own orbit closure, raise
    :class:`DuplicateBlock`.
    """
    seen = {}
    for idx, base in enumerate(bbs.base_blocks):
        for block in orbit(base, bbs.n, bbs.s):
            if block in seen:
                raise DuplicateBlock(
                    f"block {block} arises from base block {seen[block]} and from base block {idx}"
                )
            seen[block] = idx
    delta = max(bbs.block_size - 1, 0)
    return Design(bbs.n, delta, tuple(seen))


# --------------------------------------------------------------------------
# text format: "n s" then one base block per line

def to_text(bbs: BaseBlockSet) -> str:
    return f"{bbs.n} {bbs.s}\n" + "".join(" ".join(map(str, b)) + "\n" for b in bbs.base_blocks)


def from_text(text: str) -> BaseBlockSet:
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            rows.append(tuple(int(x) for x in ln.replace(",", " ").split()))
        except ValueError:
            raise FormatError(f"malformed base-block line {ln!r}") from None
    if not rows or len(rows[0]) != 2:
        raise FormatError("base-block text must start with a line 'n s'")
    (n, s), blocks = rows[0], rows[1:]
    if len({len(b) for b in blocks}) > 1:
        raise FormatError("inconsistent base block sizes")
    try:
        return BaseBlockSet(n, s, tuple(blocks))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# --------------------------------------------------------------------------
# embedded tables

@lru_cache(maxsize=None)
def _load_tables() -> dict:
    raw = resources.files("rgdesign").joinpath("data/base_blocks.txt").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != _TABLES_SHA256:
        raise RuntimeError(f"base_blocks.txt checksum mismatch: {digest}")
    tables = {}
    for chunk in raw.decode("ascii").split("@")[1:]:
        header, _, body = chunk.partition("\n")
        family, order = header.split()
        tables[(int(order), family)] = from_text(body)
    return tables


def builtin_orders(family: str | None = None) -> list[tuple[int, str]]:
    keys = _load_tables().keys()
    return sorted((k for k in keys if family in (None, k[1])), key=lambda k: (FAMILIES.index(k[1]), k[0]))


def builtin_table(order: int, family: str) -> BaseBlockSet:
    """Base blocks and step for one of the embedded (order, family) tables."""
    try:
        return _load_tables()[(order, family)]
    except KeyError:
        raise UnknownTable(f"no builtin table for order {order} in family {family!r}") from None
