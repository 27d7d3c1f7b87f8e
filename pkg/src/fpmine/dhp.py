"""Direct Hashing and Pruning.

Each level makes a single pass over the working database that counts the
current candidates, hashes every (k+1)-subset of each row into a bucket
table, and trims rows against the candidates. The bucket table then
screens the next level's candidates before they are counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .apriori import (
    CandidateSet,
    Level,
    MiningResult,
    apriori_gen,
    filter_frequent,
)
from .errors import InvalidHashConfig
from .model import (
    CountedItemset,
    ItemOrderMap,
    Transaction,
    TransactionDatabase,
    as_threshold,
    contains,
    rank_matrix,
)

_MAX_PARAM = 2**31 - 1


@dataclass(frozen=True)
class HashConfig:
    bucket_count: int = 7
    base: int = 10
    # Last level whose scan builds a hash table; None hashes at every level.
    hash_until_level: int | None = None

    def __post_init__(self):
        if not 1 <= self.bucket_count <= _MAX_PARAM:
            raise InvalidHashConfig(f"bucket_count must be in [1, {_MAX_PARAM}], got {self.bucket_count}")
        if not 2 <= self.base <= _MAX_PARAM:
            raise InvalidHashConfig(f"base must be in [2, {_MAX_PARAM}], got {self.base}")
        if self.hash_until_level is not None and self.hash_until_level < 0:
            raise InvalidHashConfig("hash_until_level must be >= 0")

    def hashes_at(self, level: int) -> bool:
        return self.hash_until_level is None or level <= self.hash_until_level


@dataclass(frozen=True)
class HashTable:
    k: int
    buckets: tuple

    def __getitem__(self, index):
        return self.buckets[index]


@dataclass(frozen=True, eq=False)
class WorkingDatabase:
    """The progressively trimmed copy of a database that DHP scans.

    ``ids`` maps each live row back to its original transaction id.
    """

    order_map: ItemOrderMap | None
    ids: np.ndarray
    indptr: np.ndarray
    data: np.ndarray

    @classmethod
    def from_database(cls, db: TransactionDatabase) -> "WorkingDatabase":
        ids, indptr, data = db.arrays
        return cls(db.order_map, ids, indptr, data)

    @property
    def arrays(self):
        return self.ids, self.indptr, self.data

    @property
    def row_count(self) -> int:
        return len(self.ids)

    def __len__(self):
        return self.row_count

    def transactions(self) -> list:
        tokens = self.order_map.tokens if self.order_map is not None else ()
        bounds = self.indptr.tolist()
        flat = self.data.tolist()
        return [
            Transaction(int(tid), tuple(tokens[r - 1] for r in flat[bounds[i]:bounds[i + 1]]))
            for i, tid in enumerate(self.ids.tolist())
        ]


def hash_bucket(itemset, order_map: ItemOrderMap, config: HashConfig = HashConfig()) -> int:
    h = 0
    for token in itemset:
        h = (h * config.base + order_map.rank(token)) % config.bucket_count
    return h


def scan_count_and_hash(work: WorkingDatabase, candidates: CandidateSet, next_k: int,
                        config: HashConfig = HashConfig()):
    """One pass: count ``candidates`` and bucket every ``next_k``-subset of
    each live row. Returns ``(counted candidates, HashTable)``."""
    n_items = len(work.order_map) if work.order_map is not None else 0
    if work.order_map is None:
        matrix = np.empty((len(candidates), candidates.k), dtype=np.int32)
    else:
        matrix = rank_matrix(candidates.itemsets, candidates.k, work.order_map)
    supports, buckets = _backend.kernels.count_and_hash(
        work.indptr, work.data, matrix, n_items, next_k, config.base, config.bucket_count
    )
    counted = CandidateSet(
        candidates.k,
        [CountedItemset(c, int(s)) for c, s in zip(candidates.itemsets, supports)],
    )
    return counted, HashTable(next_k, tuple(int(b) for b in buckets))


def filter_by_buckets(candidates: CandidateSet, table: HashTable, threshold,
                      order_map: ItemOrderMap, config: HashConfig = HashConfig()) -> CandidateSet:
    if table.k != candidates.k:
        raise ValueError(f"hash table holds {table.k}-itemsets, candidates have size {candidates.k}")
    min_sup = as_threshold(threshold).min_sup
    return CandidateSet(
        candidates.k,
        [m for m in candidates if table[hash_bucket(m.items, order_map, config)] >= min_sup],
    )


def trim_transaction(txn: Transaction, candidates, k: int):
    """Trim one transaction against the size-k candidates it contains.

    Items covered by fewer than k contained candidates are dropped; returns
    None (discard) if fewer than k + 1 items remain.
    """
    itemsets = candidates.itemsets if isinstance(candidates, CandidateSet) else list(candidates)
    hits = dict.fromkeys(txn.items, 0)
    for cand in itemsets:
        if contains(txn, cand):
            for item in cand:
                hits[item] += 1
    kept = tuple(i for i in txn.items if hits[i] >= k)
    if len(kept) < k + 1:
        return None
    return Transaction(txn.id, kept)


def prune_database(work: WorkingDatabase, candidates: CandidateSet, k: int):
    """Trim every live row; returns ``(new working database, rows left)``."""
    n_items = len(work.order_map) if work.order_map is not None else 0
    if work.order_map is None:
        matrix = np.empty((len(candidates), candidates.k), dtype=np.int32)
    else:
        matrix = rank_matrix(candidates.itemsets, candidates.k, work.order_map)
    kept, indptr, data = _backend.kernels.trim(work.indptr, work.data, matrix, n_items, k)
    pruned = WorkingDatabase(work.order_map, work.ids[kept], indptr, data)
    return pruned, pruned.row_count


@dataclass
class DhpStep:
    """What one DHP level saw; collected only when a trace list is passed."""

    k: int
    scanned: WorkingDatabase
    generated: CandidateSet  # before bucket filtering
    candidates: CandidateSet  # counted, after bucket filtering
    table_used: HashTable | None
    table_built: HashTable | None = field(default=None)


def mine_dhp(db: TransactionDatabase, threshold, config: HashConfig = HashConfig(),
             trace: list | None = None) -> MiningResult:
    threshold = as_threshold(threshold)
    work = WorkingDatabase.from_database(db)
    levels = []
    # C1 is counted by the first scan, which also hashes all 2-subsets.
    singles = db.order_map.tokens if db.order_map is not None else ()
    generated = CandidateSet(1, [CountedItemset((t,)) for t in singles])
    table = None
    k = 1
    while True:
        candidates = generated
        if k > 1 and table is not None:
            candidates = filter_by_buckets(generated, table, threshold, db.order_map, config)
        if not len(candidates):
            break
        next_k = k + 1 if config.hashes_at(k) else 0
        counted, built = scan_count_and_hash(work, candidates, next_k, config)
        scanned = work
        work, rows = prune_database(work, counted, k)
        frequent = filter_frequent(counted, threshold)
        levels.append(Level(k, counted, frequent, rows))
        if trace is not None:
            trace.append(DhpStep(k, scanned, generated, counted, table, built if next_k else None))
        if not len(frequent) or rows == 0:
            break
        table = built if next_k else None
        generated = apriori_gen(frequent)
        k += 1
    return MiningResult("dhp", threshold, tuple(levels))
