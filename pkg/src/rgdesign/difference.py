"""Cycle designs for C_n with n = 5 (mod 6) from difference triples.

For ``n = 6m + 5`` the block ``{0, 1, n-1}`` developed mod n gives the
neighbourhood blocks of C_n, and a set T of m triples ``(0, x, z)`` whose
differences ``x, z - x, z`` hit a target set exactly once gives the
remainder blocks.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .design import Design, verify
from .develop import BaseBlockSet, builtin_orders, builtin_table, develop
from .errors import NoDesignExists, SearchExhausted, Unsupported
from .graph import Graph, cycle

__all__ = [
    "DifferenceTripleSet",
    "target_differences",
    "find_difference_triples",
    "cycle_base_blocks",
    "cycle_design",
]


@dataclass(frozen=True)
class DifferenceTripleSet:
    m: int
    triples: tuple  # of (x, z), standing for base block (0, x, z)

    def differences(self) -> list[int]:
        return sorted(d for x, z in self.triples for d in (x, z - x, z))

    def is_valid(self) -> bool:
        return (
            len(self.triples) == self.m
            and all(0 < x < z for x, z in self.triples)
            and self.differences() == sorted(target_differences(self.m))
        )


def target_differences(m: int) -> set[int]:
    """``{3..3m+2}`` if m = 0, 1 (mod 4), else ``{3..3m+1} | {3m+3}``."""
    if m < 5:
        raise ValueError(f"difference triples are defined here for m >= 5, got {m}")
    if m % 4 in (0, 1):
        return set(range(3, 3 * m + 3))
    return set(range(3, 3 * m + 2)) | {3 * m + 3}


class _Restart(Exception):
    pass


def find_difference_triples(m: int, seed: int = 0, max_nodes: int = 10_000_000) -> DifferenceTripleSet:
    """Partition the target set into m triples ``{a, b, a + b}``.

    Backtracking always splits the largest unused difference, which can
    only be a sum.  Candidate splits are tried in an order shuffled by a
    ``random.Random(seed)``; each attempt is cut off after a node allowance
    that grows by 20% per restart.  Output is fixed for a fixed seed.
    """
    targets = target_differences(m)
    rng = random.Random(seed)
    allowance = 1000
    spent = 0

    while spent < max_nodes:
        remaining = set(targets)
        chosen: list[tuple[int, int]] = []
        nodes = 0

        def solve() -> bool:
            nonlocal nodes
            if not remaining:
                return True
            nodes += 1
            if nodes > allowance:
                raise _Restart
            z = max(remaining)
            remaining.discard(z)
            splits = [a for a in range(1, (z + 1) // 2) if a in remaining and z - a in remaining]
            rng.shuffle(splits)
            for a in splits:
                remaining.difference_update((a, z - a))
                chosen.append((a, z))
                if solve():
                    return True
                chosen.pop()
                remaining.update((a, z - a))
            remaining.add(z)
            return False

        try:
            found = solve()
        except _Restart:
            found = None
        spent += nodes
        if found:
            return DifferenceTripleSet(m, tuple(sorted(chosen)))
        if found is False:
            # the whole tree was exhausted without hitting the allowance
            break
        allowance = allowance * 6 // 5
    raise SearchExhausted(f"no difference triples found for m={m} within {max_nodes} nodes")


def cycle_base_blocks(n: int) -> BaseBlockSet:
    """Base blocks generating a design for C_n, when this module knows how."""
    if n < 5 or n % 6 not in (3, 5):
        raise ValueError(f"C_{n} is not admissible: need n >= 5 and n = 3 or 5 (mod 6)")
    if n in (9, 11):
        raise NoDesignExists(f"no design exists for C_{n}")
    if (n, "delta2") in builtin_orders("delta2"):
        return builtin_table(n, "delta2")
    if n % 6 == 3:
        raise Unsupported(f"C_{n}: n = 3 (mod 6) beyond 39 is built by Wilson fill-in over a GDD")
    if n < 35:
        # 6m + 5 with m < 5 and not tabulated: cannot happen for admissible n
        raise Unsupported(f"no base blocks for C_{n}")
    ts = find_difference_triples((n - 5) // 6)
    return BaseBlockSet(n, 1, ((0, 1, n - 1),) + tuple((0, x, z) for x, z in ts.triples))


def cycle_design(n: int) -> tuple[Design, Graph]:
    """A verified design for the cycle C_n on points ``0..n-1``."""
    d = develop(cycle_base_blocks(n))
    g = cycle(n)
    report = verify(d, g)
    if not report.ok:
        raise AssertionError(f"cycle design for C_{n} failed verification:\n{report.summary()}")
    return d, g
