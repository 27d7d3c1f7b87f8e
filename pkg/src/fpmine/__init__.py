"""Apriori and DHP frequent-itemset mining with per-level instrumentation."""

from ._backend import BACKEND
from .apriori import (
    CandidateSet,
    FrequentSet,
    Level,
    MiningResult,
    apriori_gen,
    count_support,
    filter_frequent,
    frequent_1_itemsets,
    has_infrequent_subset,
    join,
    mine_apriori,
)
from .dhp import (
    HashConfig,
    HashTable,
    WorkingDatabase,
    filter_by_buckets,
    hash_bucket,
    mine_dhp,
    prune_database,
    scan_count_and_hash,
    trim_transaction,
)
from .errors import FPMError, MinerDisagreement
from .model import (
    CountedItemset,
    ItemOrderMap,
    SupportThreshold,
    Transaction,
    TransactionDatabase,
    build_order_map,
    contains,
    itemset_support,
    k_subsets,
)
from .oracle import enumerate_frequent

__version__ = "0.1.0"
