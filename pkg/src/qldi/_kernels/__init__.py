"""Elimination kernels for the distance search.

At import time the compiled Cython kernel is preferred; the pure numpy
fallback is used when the extension was not built or ``QLDI_PURE_PYTHON``
is set.  Both backends expose the same ``rref_mod_inplace`` contract.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("QLDI_PURE_PYTHON"):
    from ._py import rref_mod_inplace

    BACKEND = "python"
else:
    try:
        from ._speed import rref_mod_inplace  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from ._py import rref_mod_inplace  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["BACKEND", "rref_mod_inplace", "rank_mod", "nullspace_mod"]


def _as_reduced(M: np.ndarray, p: int) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)


def rank_mod(M: np.ndarray, p: int) -> int:
    """Rank of ``M`` over Z_p."""
    if M.size == 0:
        return 0
    work = _as_reduced(M, p)
    rank, _ = rref_mod_inplace(work, p)
    return rank


def nullspace_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Right null space basis of ``M`` over Z_p, rows of the returned array.

    Deterministic: vectors come from the free-variable parametrization of the
    reduced echelon form in ascending column order.
    """
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = M.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    work = _as_reduced(M, p)
    rank, pivots = rref_mod_inplace(work, p)
    work = np.asarray(work)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for r, pc in enumerate(pivots):
            basis[b, pc] = (-work[r, fc]) % p
    return basis
