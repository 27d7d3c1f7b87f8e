"""Pure-Python implementations of the counting, hashing and trimming loops.

Every function takes the CSR layout used throughout the package:
``indptr`` (int64, length rows + 1) and ``data`` (int32 item ranks, 1-based,
ascending within a row). Candidates arrive as an (n, k) int32 rank matrix.
``_ckernels.pyx`` provides the same functions with identical results.
"""

from itertools import combinations

import numpy as np

NAME = "python"


def _rows(indptr, data):
    flat = data.tolist()
    bounds = indptr.tolist()
    return [flat[bounds[r]:bounds[r + 1]] for r in range(len(bounds) - 1)]


def count_and_hash(indptr, data, cands, n_items, hash_k, base, n_buckets):
    """Count candidate supports and, if ``hash_k`` > 0, bucket every
    ``hash_k``-subset of each row.

    Returns ``(supports, buckets)``; ``buckets`` is empty when hashing is off.
    """
    cand_rows = [tuple(c) for c in cands.tolist()]
    k = cands.shape[1] if cands.ndim == 2 else 0
    supports = [0] * len(cand_rows)
    buckets = [0] * (n_buckets if hash_k > 0 else 0)
    for row in _rows(indptr, data):
        if cand_rows and len(row) >= k:
            present = set(row)
            for c, cand in enumerate(cand_rows):
                if all(i in present for i in cand):
                    supports[c] += 1
        if hash_k > 0 and len(row) >= hash_k:
            for combo in combinations(row, hash_k):
                h = 0
                for rank in combo:
                    h = (h * base + rank) % n_buckets
                buckets[h] += 1
    return np.asarray(supports, dtype=np.int64), np.asarray(buckets, dtype=np.int64)


def count_support(indptr, data, cands, n_items):
    return count_and_hash(indptr, data, cands, n_items, 0, 2, 1)[0]


def trim(indptr, data, cands, n_items, k):
    """Drop items covered by fewer than ``k`` contained candidates, then drop
    rows left with fewer than ``k + 1`` items.

    Returns ``(kept_row_indices, new_indptr, new_data)``.
    """
    cand_rows = [tuple(c) for c in cands.tolist()]
    kept = []
    new_indptr = [0]
    new_data = []
    for r, row in enumerate(_rows(indptr, data)):
        present = set(row)
        hits = dict.fromkeys(row, 0)
        for cand in cand_rows:
            if all(i in present for i in cand):
                for i in cand:
                    hits[i] += 1
        survivors = [i for i in row if hits[i] >= k]
        if len(survivors) >= k + 1:
            kept.append(r)
            new_data.extend(survivors)
            new_indptr.append(len(new_data))
    return (
        np.asarray(kept, dtype=np.int64),
        np.asarray(new_indptr, dtype=np.int64),
        np.asarray(new_data, dtype=np.int32),
    )
