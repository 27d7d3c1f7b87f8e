"""Items, itemsets, transactions and the transaction database.

Itemsets are plain tuples of item tokens in canonical order. Because the
item order map ranks tokens lexicographically, canonical order is simply
sorted token order, so most helpers here never need the map itself.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    EmptyUniverse,
    InvalidArity,
    InvalidItem,
    InvalidItemset,
    InvalidThreshold,
)

Item = str
Itemset = tuple  # tuple[str, ...], canonical (ascending) order

_FORBIDDEN = frozenset(",#")


def validate_item(token) -> Item:
    if not isinstance(token, str) or not token:
        raise InvalidItem(f"item must be a non-empty string, got {token!r}")
    if any(ch in _FORBIDDEN or ch.isspace() for ch in token):
        raise InvalidItem(f"item {token!r} contains a separator, whitespace or '#'")
    return token


def canonical(items: Iterable[str]) -> Itemset:
    """Deduplicate and sort ``items`` into canonical itemset order."""
    return tuple(sorted({validate_item(i) for i in items}))


@dataclass(frozen=True)
class ItemOrderMap:
    """Bijection between item tokens and ranks 1..n."""

    tokens: tuple  # tokens[r - 1] has rank r

    @cached_property
    def _rank(self) -> dict:
        return {t: r for r, t in enumerate(self.tokens, start=1)}

    def __len__(self):
        return len(self.tokens)

    def __contains__(self, token):
        return token in self._rank

    def rank(self, token: Item) -> int:
        try:
            return self._rank[token]
        except KeyError:
            raise InvalidItem(f"item {token!r} is not in the universe") from None

    def token(self, rank: int) -> Item:
        return self.tokens[rank - 1]

    def ranks(self, itemset: Iterable[Item]) -> tuple:
        return tuple(self.rank(t) for t in itemset)

    def as_dict(self) -> dict:
        return dict(self._rank)


def build_order_map(universe: Iterable[Item]) -> ItemOrderMap:
    tokens = sorted({validate_item(t) for t in universe})
    if not tokens:
        raise EmptyUniverse("cannot build an order map over an empty universe")
    return ItemOrderMap(tuple(tokens))


@dataclass(frozen=True)
class Transaction:
    id: int
    items: Itemset


@dataclass(frozen=True)
class SupportThreshold:
    min_sup: int

    def __post_init__(self):
        if isinstance(self.min_sup, bool) or not isinstance(self.min_sup, int):
            raise InvalidThreshold(f"min_sup must be an integer, got {self.min_sup!r}")
        if self.min_sup < 1:
            raise InvalidThreshold(f"min_sup must be >= 1, got {self.min_sup}")

    @classmethod
    def from_ratio(cls, ratio, n_transactions: int) -> "SupportThreshold":
        """Convert a relative threshold using ceiling(ratio * |D|).

        ``ratio`` may be a float, a decimal string or a Fraction; floats go
        through their shortest repr so that 0.3 means exactly 3/10.
        """
        frac = Fraction(ratio) if isinstance(ratio, (str, Fraction, int)) else Fraction(repr(ratio))
        if not 0 < frac <= 1:
            raise InvalidThreshold(f"support ratio must lie in (0, 1], got {ratio}")
        return cls(max(1, math.ceil(frac * n_transactions)))


def as_threshold(threshold) -> SupportThreshold:
    if isinstance(threshold, SupportThreshold):
        return threshold
    return SupportThreshold(threshold)


@dataclass(frozen=True)
class CountedItemset:
    items: Itemset
    support: int = 0

    def __str__(self):
        return f"{','.join(self.items)} / {self.support}"


@dataclass(frozen=True, eq=True)
class TransactionDatabase:
    """Immutable transaction database with its item order map.

    ``universe`` defaults to the items that occur; pass a larger one to
    declare items that never appear (e.g. synthetic data).
    """

    transactions: tuple
    universe: frozenset
    order_map: ItemOrderMap | None = field(compare=False)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[str]], universe: Iterable[str] | None = None):
        txns = tuple(Transaction(i, canonical(row)) for i, row in enumerate(rows, start=1))
        items = {t for txn in txns for t in txn.items}
        if universe is not None:
            declared = {validate_item(t) for t in universe}
            if not items <= declared:
                raise InvalidItem(f"items outside the declared universe: {sorted(items - declared)}")
            items = declared
        order_map = build_order_map(items) if items else None
        return cls(txns, frozenset(items), order_map)

    def __len__(self):
        return len(self.transactions)

    @property
    def rows(self) -> list:
        return [t.items for t in self.transactions]

    @cached_property
    def arrays(self):
        """CSR view of the database: (ids, indptr, data) with 1-based ranks."""
        return to_csr(self.transactions, self.order_map)


def to_csr(transactions, order_map):
    ids = np.fromiter((t.id for t in transactions), dtype=np.int64, count=len(transactions))
    lengths = np.fromiter((len(t.items) for t in transactions), dtype=np.int64, count=len(transactions))
    indptr = np.zeros(len(transactions) + 1, dtype=np.int64)
    np.cumsum(lengths, out=indptr[1:])
    data = np.empty(int(indptr[-1]), dtype=np.int32)
    pos = 0
    for t in transactions:
        for tok in t.items:
            data[pos] = order_map.rank(tok)
            pos += 1
    return ids, indptr, data


def rank_matrix(itemsets, k: int, order_map: ItemOrderMap | None) -> np.ndarray:
    """Pack equal-size itemsets into an (n, k) int32 array of ranks."""
    out = np.empty((len(itemsets), k), dtype=np.int32)
    for row, itemset in enumerate(itemsets):
        out[row] = order_map.ranks(itemset)
    return out


def contains(transaction, candidate: Itemset) -> bool:
    """Subset test by an ordered merge walk over two canonical itemsets."""
    items = transaction.items if isinstance(transaction, Transaction) else transaction
    i = 0
    n = len(items)
    for wanted in candidate:
        while i < n and items[i] < wanted:
            i += 1
        if i == n or items[i] != wanted:
            return False
        i += 1
    return True


def itemset_support(db: TransactionDatabase, itemset: Itemset) -> int:
    if not itemset:
        raise InvalidItemset("support of the empty itemset is not defined")
    return sum(1 for t in db.transactions if contains(t, itemset))


def k_subsets(itemset: Itemset, k: int) -> list:
    if not 1 <= k <= len(itemset):
        raise InvalidArity(f"k={k} is out of range for an itemset of size {len(itemset)}")
    return list(itertools.combinations(itemset, k))

