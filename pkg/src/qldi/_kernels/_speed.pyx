# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p elimination kernel for the distance-search hot path."""

import numpy as np

cimport numpy as cnp


def rref_mod_inplace(cnp.int64_t[:, :] M, long p):
    """Reduced row echelon form of ``M`` mod ``p``, in place.

    Entries must already be reduced to [0, p).  Returns
    (rank, pivot column indices).
    """
    cdef Py_ssize_t rows = M.shape[0]
    cdef Py_ssize_t cols = M.shape[1]
    cdef Py_ssize_t r = 0, c, i, k, piv
    cdef long inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(cols):
                tmp = M[r, k]
                M[r, k] = M[piv, k]
                M[piv, k] = tmp
        inv = pow(int(M[r, c]), p - 2, p)
        if inv != 1:
            for k in range(cols):
                M[r, k] = M[r, k] * inv % p
        for i in range(rows):
            if i != r and M[i, c] != 0:
                f = M[i, c]
                for k in range(cols):
                    M[i, k] = (M[i, k] - f * M[r, k]) % p
                    if M[i, k] < 0:
                        M[i, k] += p
        pivots.append(c)
        r += 1
    return r, pivots
