"""Weight certificates of infeasibility for exact cover.

Give every column an integer weight such that each row weighs at least zero
while all columns together weigh less than zero.  An exact cover would pick
rows whose weights add up to the total column weight, which is impossible,
so such a weighting proves no cover exists.  A linear program proposes the
weights; they are then checked in exact integer arithmetic, so a floating
point slip can only lose a certificate, never produce a false one.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

__all__ = ["weight_certificate", "check_weight_certificate"]


def check_weight_certificate(ncols: int, rows: Sequence[Sequence[int]], weights: Sequence[int]) -> bool:
    if len(weights) != ncols:
        return False
    return sum(weights) < 0 and all(sum(weights[c] for c in row) >= 0 for row in rows)


def weight_certificate(ncols: int, rows: Sequence[Sequence[int]], max_denominator: int = 1000) -> list[int] | None:
    """Integer column weights proving infeasibility, or None if none was found.

    None does not mean a cover exists, only that the relaxation is feasible
    (or the rounded weights failed the exact check).
    """
    if ncols == 0:
        return None
    A = np.zeros((len(rows), ncols))
    for i, row in enumerate(rows):
        A[i, list(row)] = 1.0
    res = linprog(np.ones(ncols), A_ub=-A if len(rows) else None, b_ub=np.zeros(len(rows)) if len(rows) else None,
                  bounds=[(-1, 1)] * ncols, method="highs")
    if res.status != 0 or res.fun > -1e-7:
        return None
    fracs = [Fraction(float(v)).limit_denominator(max_denominator) for v in res.x]
    scale = lcm(*(f.denominator for f in fracs))
    weights = [int(f * scale) for f in fracs]
    return weights if check_weight_certificate(ncols, rows, weights) else None
