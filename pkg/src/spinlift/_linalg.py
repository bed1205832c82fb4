"""Small shared linear-algebra helpers."""

from __future__ import annotations

import numpy as np


def maxabs(m) -> float:
    """Largest entry magnitude of an array (0.0 for empty input)."""
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def pivot_columns(m):
    """Column-pivoted elimination (modified Gram-Schmidt).

    Returns ``(order, pivots)`` where ``order`` lists column indices in
    decreasing pivot size and ``pivots`` holds the corresponding pivot
    magnitudes.  The pivot sequence exposes the numerical rank: rank-r input
    has r pivots well above round-off and the rest near zero.
    """
    work = np.array(m, dtype=float)
    ncols = work.shape[1]
    order: list[int] = []
    pivots: list[float] = []
    remaining = list(range(ncols))
    for _ in range(ncols):
        norms = np.sqrt((work * work).sum(axis=0))
        j = max(remaining, key=lambda c: norms[c])
        order.append(j)
        pivots.append(float(norms[j]))
        remaining.remove(j)
        if norms[j] > 0.0:
            q = work[:, j] / norms[j]
            work -= np.outer(q, q @ work)
        work[:, j] = 0.0
    return order, pivots
