"""Level-wise Apriori mining: join, prune, count, filter."""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .model import (
    CountedItemset,
    SupportThreshold,
    TransactionDatabase,
    as_threshold,
    rank_matrix,
)


@dataclass(frozen=True)
class _Collection:
    k: int
    members: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        seen = set()
        for m in self.members:
            if len(m.items) != self.k:
                raise ValueError(f"{m.items} does not have size {self.k}")
            if m.items in seen:
                raise ValueError(f"duplicate itemset {m.items}")
            seen.add(m.items)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def itemsets(self) -> list:
        return [m.items for m in self.members]

    def as_dict(self) -> dict:
        return {m.items: m.support for m in self.members}


class CandidateSet(_Collection):
    """Ck: candidate itemsets of size k with their support counters."""


class FrequentSet(_Collection):
    """Lk: the candidates that met the support threshold."""


@dataclass(frozen=True)
class Level:
    k: int
    candidates: CandidateSet
    frequent: FrequentSet
    db_rows_after: int

    @property
    def candidate_count(self):
        return len(self.candidates)

    @property
    def frequent_count(self):
        return len(self.frequent)


@dataclass(frozen=True)
class MiningResult:
    algorithm: str  # "apriori" | "dhp"
    threshold: SupportThreshold
    levels: tuple = ()

    def frequent_itemsets(self) -> dict:
        """All frequent itemsets across levels, mapped to their supports."""
        out = {}
        for level in self.levels:
            out.update(level.frequent.as_dict())
        return out


def count_1_itemsets(db: TransactionDatabase) -> CandidateSet:
    """C1: every universe item with its support."""
    if not db.universe:
        return CandidateSet(1)
    singles = [(t,) for t in db.order_map.tokens]
    return count_support(db, CandidateSet(1, [CountedItemset(s) for s in singles]))


def frequent_1_itemsets(db: TransactionDatabase, threshold) -> FrequentSet:
    return filter_frequent(count_1_itemsets(db), threshold)


def join(frequent) -> list:
    """Self-join of Lk: pairs sharing their first k-1 items, left last item
    strictly below the right one."""
    itemsets = sorted(m.items if isinstance(m, CountedItemset) else tuple(m) for m in frequent)
    out = []
    start = 0
    n = len(itemsets)
    while start < n:
        prefix = itemsets[start][:-1]
        end = start + 1
        while end < n and itemsets[end][:-1] == prefix:
            end += 1
        for i in range(start, end):
            left = itemsets[i]
            for j in range(i + 1, end):
                out.append(left + itemsets[j][-1:])
        start = end
    return out


def has_infrequent_subset(candidate, frequent) -> bool:
    known = frequent if isinstance(frequent, (set, frozenset)) else {
        m.items if isinstance(m, CountedItemset) else tuple(m) for m in frequent
    }
    return any(candidate[:i] + candidate[i + 1:] not in known for i in range(len(candidate)))


def apriori_gen(frequent: FrequentSet) -> CandidateSet:
    known = set(frequent.itemsets)
    members = [CountedItemset(c) for c in join(frequent) if not has_infrequent_subset(c, known)]
    return CandidateSet(frequent.k + 1, members)


def count_support(db, candidates: CandidateSet) -> CandidateSet:
    """Count each candidate against ``db`` (a TransactionDatabase or a DHP
    working database); candidate order is preserved."""
    if not len(candidates) or db.order_map is None:
        return CandidateSet(candidates.k, [CountedItemset(c, 0) for c in candidates.itemsets])
    _, indptr, data = db.arrays
    matrix = rank_matrix(candidates.itemsets, candidates.k, db.order_map)
    supports = _backend.kernels.count_support(indptr, data, matrix, len(db.order_map))
    return CandidateSet(
        candidates.k,
        [CountedItemset(c, int(s)) for c, s in zip(candidates.itemsets, supports)],
    )


def filter_frequent(candidates: CandidateSet, threshold) -> FrequentSet:
    min_sup = as_threshold(threshold).min_sup
    return FrequentSet(candidates.k, [m for m in candidates if m.support >= min_sup])


def mine_apriori(db: TransactionDatabase, threshold) -> MiningResult:
    threshold = as_threshold(threshold)
    rows = len(db)
    levels = []
    candidates = count_1_itemsets(db)
    while len(candidates):
        frequent = filter_frequent(candidates, threshold)
        levels.append(Level(candidates.k, candidates, frequent, rows))
        if not len(frequent):
            break
        candidates = count_support(db, apriori_gen(frequent))
    return MiningResult("apriori", threshold, tuple(levels))
