"""Pool-adjacent-violators projection onto non-decreasing sequences."""

from __future__ import annotations

import numpy as np


def isotonic_projection(values: np.ndarray) -> np.ndarray:
    """L2-project ``values`` onto the cone of non-decreasing sequences.

    Plain PAVA with unit weights.  Returns a new array; the input is not
    modified.  The projection is order preserving (x <= y pointwise implies
    proj(x) <= proj(y)), which downstream monotonicity arguments rely on.
    """
    y = np.asarray(values, dtype=float)
    n = y.size
    if n <= 1:
        return y.copy()
    # block means and block sizes, merged right-to-left on violation
    means = np.empty(n)
    counts = np.empty(n, dtype=np.intp)
    top = 0
    for i in range(n):
        means[top] = y[i]
        counts[top] = 1
        while top > 0 and means[top - 1] > means[top]:
            total = counts[top - 1] + counts[top]
            means[top - 1] = (
                counts[top - 1] * means[top - 1] + counts[top] * means[top]
            ) / total
            counts[top - 1] = total
            top -= 1
        top += 1
    return np.repeat(means[:top], counts[:top])
