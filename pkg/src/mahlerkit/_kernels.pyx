# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular elimination kernels (see _kernels_py for the reference version)."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free


cdef uint64_t _inv_mod(uint64_t a, uint64_t p) nogil:
    cdef int64_t t = 0, new_t = 1, q, tmp
    cdef int64_t r = <int64_t>p, new_r = <int64_t>a
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += <int64_t>p
    return <uint64_t>t


cdef Py_ssize_t _rank(uint64_t* a, Py_ssize_t nrows, Py_ssize_t ncols, uint64_t p) nogil:
    cdef Py_ssize_t rank = 0, col, r, k, piv
    cdef uint64_t inv, f, tmp
    cdef uint64_t* prow
    cdef uint64_t* row
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if a[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(col, ncols):
                tmp = a[piv * ncols + k]
                a[piv * ncols + k] = a[rank * ncols + k]
                a[rank * ncols + k] = tmp
        prow = a + rank * ncols
        inv = _inv_mod(prow[col], p)
        for k in range(col, ncols):
            prow[k] = (prow[k] * inv) % p
        for r in range(rank + 1, nrows):
            row = a + r * ncols
            f = row[col]
            if f == 0:
                continue
            for k in range(col, ncols):
                if prow[k] != 0:
                    row[k] = (row[k] + (p - (f * prow[k]) % p)) % p
        rank += 1
    return rank


def rank_mod(rows, Py_ssize_t ncols, uint64_t prime):
    """Rank of an integer matrix modulo ``prime`` (prime < 2**32)."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, rank
    if nrows == 0 or ncols == 0:
        return 0
    cdef uint64_t* a = <uint64_t*>malloc(nrows * ncols * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = <uint64_t>(row[j] % prime)
        with nogil:
            rank = _rank(a, nrows, ncols, prime)
    finally:
        free(a)
    return rank
