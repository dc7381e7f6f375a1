"""Pure-Python/numpy fallback for the mod-p elimination kernel."""

from __future__ import annotations

import numpy as np


def rref_mod_inplace(M: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduced row echelon form of ``M`` mod ``p``, in place.

    ``M`` must be an int64 array with entries already reduced to [0, p).
    Returns (rank, pivot column indices).
    """
    rows, cols = M.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        if inv != 1:
            M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots
