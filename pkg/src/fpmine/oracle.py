"""Brute-force frequent-itemset enumeration used as ground truth.

Deliberately independent of the miners: no join, no prune, no hashing,
no compiled kernels. Supports are counted with plain set inclusion over
the full database.
"""

from __future__ import annotations

from .errors import OracleScaleExceeded
from .model import CountedItemset, TransactionDatabase, as_threshold

MAX_ORACLE_ITEMS = 20


def enumerate_frequent(db: TransactionDatabase, threshold, max_k: int | None = None) -> list:
    """Every itemset with support >= min_sup (and size <= max_k), sorted by
    size and then lexicographically."""
    min_sup = as_threshold(threshold).min_sup
    universe = sorted(db.universe)
    if len(universe) > MAX_ORACLE_ITEMS:
        raise OracleScaleExceeded(
            f"oracle enumerates 2^n itemsets; n={len(universe)} exceeds {MAX_ORACLE_ITEMS}"
        )
    limit = len(universe) if max_k is None else max_k
    rows = [frozenset(t.items) for t in db.transactions]
    found = []

    def extend(prefix, start):
        if len(prefix) == limit:
            return
        for i in range(start, len(universe)):
            itemset = prefix + (universe[i],)
            members = frozenset(itemset)
            support = sum(1 for row in rows if members <= row)
            # Supersets of an infrequent itemset can only be rarer.
            if support >= min_sup:
                found.append(CountedItemset(itemset, support))
                extend(itemset, i + 1)

    extend((), 0)
    found.sort(key=lambda c: (len(c.items), c.items))
    return found
