# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled counting, hashing and trimming loops (see _pykernels for the contract)."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t

NAME = "cython"


cdef inline void _hash_subsets(const int32_t* items, Py_ssize_t length, Py_ssize_t h,
                               int64_t base, int64_t n_buckets, int64_t* buckets,
                               Py_ssize_t* pos, int64_t* prefix) noexcept nogil:
    # Lexicographic walk over h-subsets; prefix[j] is the hash of the first j
    # chosen items so each step only rehashes the changed suffix.
    cdef Py_ssize_t j, t
    for j in range(h):
        pos[j] = j
    prefix[0] = 0
    for j in range(h):
        prefix[j + 1] = (prefix[j] * base + items[pos[j]]) % n_buckets
    while True:
        buckets[prefix[h]] += 1
        j = h - 1
        while j >= 0 and pos[j] == length - h + j:
            j -= 1
        if j < 0:
            return
        pos[j] += 1
        for t in range(j + 1, h):
            pos[t] = pos[t - 1] + 1
        for t in range(j, h):
            prefix[t + 1] = (prefix[t] * base + items[pos[t]]) % n_buckets


def count_and_hash(const int64_t[::1] indptr, const int32_t[::1] data,
                   const int32_t[:, ::1] cands, Py_ssize_t n_items,
                   Py_ssize_t hash_k, int64_t base, int64_t n_buckets):
    cdef Py_ssize_t n_rows = indptr.shape[0] - 1
    cdef Py_ssize_t n_cands = cands.shape[0]
    cdef Py_ssize_t k = cands.shape[1]
    cdef Py_ssize_t r, p, c, j, start, end

    supports = np.zeros(n_cands, dtype=np.int64)
    buckets = np.zeros(n_buckets if hash_k > 0 else 0, dtype=np.int64)
    marks = np.zeros(n_items + 1, dtype=np.uint8)
    pos = np.zeros(hash_k + 1, dtype=np.intp)
    prefix = np.zeros(hash_k + 1, dtype=np.int64)
    cdef int64_t[::1] sup = supports
    cdef int64_t[::1] bk = buckets
    cdef uint8_t[::1] mk = marks
    cdef Py_ssize_t[::1] pv = pos
    cdef int64_t[::1] pf = prefix
    cdef bint ok

    with nogil:
        for r in range(n_rows):
            start = indptr[r]
            end = indptr[r + 1]
            if n_cands > 0 and end - start >= k:
                for p in range(start, end):
                    mk[data[p]] = 1
                for c in range(n_cands):
                    ok = True
                    for j in range(k):
                        if not mk[cands[c, j]]:
                            ok = False
                            break
                    if ok:
                        sup[c] += 1
                for p in range(start, end):
                    mk[data[p]] = 0
            if hash_k > 0 and end - start >= hash_k:
                _hash_subsets(&data[start], end - start, hash_k, base, n_buckets,
                              &bk[0], &pv[0], &pf[0])
    return supports, buckets


def count_support(indptr, data, cands, Py_ssize_t n_items):
    return count_and_hash(indptr, data, cands, n_items, 0, 2, 1)[0]


def trim(const int64_t[::1] indptr, const int32_t[::1] data,
         const int32_t[:, ::1] cands, Py_ssize_t n_items, Py_ssize_t k):
    cdef Py_ssize_t n_rows = indptr.shape[0] - 1
    cdef Py_ssize_t n_cands = cands.shape[0]
    cdef Py_ssize_t width = cands.shape[1]
    cdef Py_ssize_t r, p, c, j, start, end, survivors
    cdef Py_ssize_t n_kept = 0, out = 0

    kept = np.empty(n_rows, dtype=np.int64)
    new_indptr = np.zeros(n_rows + 1, dtype=np.int64)
    new_data = np.empty(data.shape[0], dtype=np.int32)
    marks = np.zeros(n_items + 1, dtype=np.uint8)
    hits = np.zeros(n_items + 1, dtype=np.int64)
    cdef int64_t[::1] kv = kept
    cdef int64_t[::1] ip = new_indptr
    cdef int32_t[::1] nd = new_data
    cdef uint8_t[::1] mk = marks
    cdef int64_t[::1] hv = hits
    cdef bint ok

    with nogil:
        for r in range(n_rows):
            start = indptr[r]
            end = indptr[r + 1]
            for p in range(start, end):
                mk[data[p]] = 1
            for c in range(n_cands):
                ok = True
                for j in range(width):
                    if not mk[cands[c, j]]:
                        ok = False
                        break
                if ok:
                    for j in range(width):
                        hv[cands[c, j]] += 1
            survivors = 0
            for p in range(start, end):
                if hv[data[p]] >= k:
                    survivors += 1
            if survivors >= k + 1:
                for p in range(start, end):
                    if hv[data[p]] >= k:
                        nd[out] = data[p]
                        out += 1
                kv[n_kept] = r
                n_kept += 1
                ip[n_kept] = out
            for p in range(start, end):
                mk[data[p]] = 0
                hv[data[p]] = 0
    return kept[:n_kept].copy(), new_indptr[:n_kept + 1].copy(), new_data[:out].copy()
