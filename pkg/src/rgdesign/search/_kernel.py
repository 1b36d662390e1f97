"""Compiled Algorithm X over flat index arrays.

Same branching rule as :class:`~rgdesign.search.cover.ExactCover` (fewest live
rows, lowest column on ties, rows in ascending order), so node counts agree
with the reference implementation.  Rows are killed and revived on an undo
stack instead of copying state.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def search(ncols, row_ptr, row_cols, col_ptr, col_rows, budget, want, out):
    """Return ``(nodes, found)``; ``nodes`` is negated when the budget ran out.

    ``out[:depth]`` receives the rows of the first solution and
    ``out[ncols]`` its length.
    """
    nrows = row_ptr.size - 1
    alive = np.ones(nrows, np.uint8)
    cnt = np.empty(ncols, np.int64)
    for c in range(ncols):
        cnt[c] = col_ptr[c + 1] - col_ptr[c]
    covered = np.zeros(ncols, np.uint8)
    killed = np.empty(nrows + 1, np.int64)
    nk = 0
    fcol = np.empty(ncols + 1, np.int64)
    fpos = np.empty(ncols + 1, np.int64)
    fmark = np.empty(ncols + 1, np.int64)
    frow = np.empty(ncols + 1, np.int64)
    depth = 0
    nodes = 0
    found = 0
    uncovered = ncols
    descend = True
    while True:
        if descend:
            descend = False
            if uncovered == 0:
                if found == 0:
                    for i in range(depth):
                        out[i] = frow[i]
                    out[ncols] = depth
                found += 1
                if found >= want:
                    return nodes, found
            else:
                nodes += 1
                if nodes > budget:
                    return -nodes, found
                best = -1
                low = nrows + 1
                for c in range(ncols):
                    if covered[c] == 0 and cnt[c] < low:
                        low = cnt[c]
                        best = c
                        if low == 0:
                            break
                fcol[depth] = best
                fpos[depth] = col_ptr[best]
                fmark[depth] = nk
                frow[depth] = -1
                depth += 1
        if depth == 0:
            return nodes, found
        d = depth - 1
        r = frow[d]
        if r >= 0:
            # undo the row chosen last time at this level
            while nk > fmark[d]:
                nk -= 1
                r2 = killed[nk]
                alive[r2] = 1
                for j in range(row_ptr[r2], row_ptr[r2 + 1]):
                    cnt[row_cols[j]] += 1
            for j in range(row_ptr[r], row_ptr[r + 1]):
                covered[row_cols[j]] = 0
                uncovered += 1
            frow[d] = -1
        c = fcol[d]
        p = fpos[d]
        end = col_ptr[c + 1]
        while p < end and alive[col_rows[p]] == 0:
            p += 1
        if p == end:
            depth -= 1
            continue
        r = col_rows[p]
        fpos[d] = p + 1
        frow[d] = r
        for j in range(row_ptr[r], row_ptr[r + 1]):
            c1 = row_cols[j]
            covered[c1] = 1
            uncovered -= 1
            for q in range(col_ptr[c1], col_ptr[c1 + 1]):
                r2 = col_rows[q]
                if alive[r2]:
                    alive[r2] = 0
                    killed[nk] = r2
                    nk += 1
                    for jj in range(row_ptr[r2], row_ptr[r2 + 1]):
                        cnt[row_cols[jj]] -= 1
        descend = True


def pack(ncols, rows):
    """CSR arrays for rows and for the column -> rows index."""
    row_ptr = np.zeros(len(rows) + 1, np.int64)
    row_ptr[1:] = np.cumsum([len(r) for r in rows]) if rows else 0
    row_cols = np.fromiter((c for r in rows for c in r), np.int64, count=int(row_ptr[-1]))
    by_col = [[] for _ in range(ncols)]
    for i, r in enumerate(rows):
        for c in r:
            by_col[c].append(i)
    col_ptr = np.zeros(ncols + 1, np.int64)
    col_ptr[1:] = np.cumsum([len(x) for x in by_col]) if ncols else 0
    col_rows = np.fromiter((i for x in by_col for i in x), np.int64, count=int(col_ptr[-1]))
    return row_ptr, row_cols, col_ptr, col_rows
