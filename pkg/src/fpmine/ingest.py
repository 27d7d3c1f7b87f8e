"""Transaction files and synthetic datasets.

File format: one transaction per line, items separated by commas or
whitespace. Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import EncodingError, InvalidItem, ParseError, SpecError
from .model import TransactionDatabase, validate_item

Separator = Literal["comma", "whitespace", "auto"]


@dataclass(frozen=True)
class InputFormat:
    separator: Separator = "auto"
    comment_prefix: str = "#"

    def __post_init__(self):
        if self.separator not in ("comma", "whitespace", "auto"):
            raise ValueError(f"unknown separator {self.separator!r}")


def parse_transactions(stream, fmt: InputFormat = InputFormat()) -> TransactionDatabase:
    """Parse a byte stream (or bytes / str) into a TransactionDatabase."""
    raw = stream if isinstance(stream, (bytes, str)) else stream.read()
    if isinstance(raw, bytes):
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"input is not valid UTF-8: {exc}") from None
    else:
        text = raw
    separator = fmt.separator
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(fmt.comment_prefix):
            continue
        if separator == "auto":
            separator = "comma" if "," in stripped else "whitespace"
        if separator == "comma":
            tokens = [tok.strip() for tok in stripped.split(",")]
            if "" in tokens:
                raise ParseError("empty item between separators", lineno)
        else:
            tokens = stripped.split()
        try:
            rows.append([validate_item(tok) for tok in tokens])
        except InvalidItem as exc:
            raise ParseError(str(exc), lineno) from None
    return TransactionDatabase.from_rows(rows)


def read_transactions(path, fmt: InputFormat = InputFormat()) -> TransactionDatabase:
    with open(path, "rb") as fh:
        return parse_transactions(fh, fmt)


def serialize_transactions(db: TransactionDatabase, separator: str = "comma") -> str:
    """Write ``db`` back in the line format. Empty transactions cannot be
    represented (blank lines are skipped on input) and are rejected."""
    joiner = "," if separator == "comma" else " "
    lines = []
    for txn in db.transactions:
        if not txn.items:
            raise ValueError(f"transaction {txn.id} is empty and has no line representation")
        lines.append(joiner.join(txn.items))
    return "".join(line + "\n" for line in lines)


@dataclass(frozen=True)
class GeneratorSpec:
    """Synthetic dataset parameters.

    Transaction sizes follow a normal distribution around ``mean_size``
    (sd = max(1, mean_size / 2)), rounded and clamped to [1, item_count];
    items are drawn uniformly without replacement. Item tokens are ``I``
    followed by a zero-padded index so they sort numerically.
    """

    item_count: int
    transaction_count: int
    mean_size: float
    seed: int = 0

    def __post_init__(self):
        if self.item_count < 1:
            raise SpecError(f"item_count must be >= 1, got {self.item_count}")
        if self.transaction_count < 0:
            raise SpecError(f"transaction_count must be >= 0, got {self.transaction_count}")
        if self.mean_size <= 0:
            raise SpecError(f"mean_size must be > 0, got {self.mean_size}")
        if self.mean_size > self.item_count:
            raise SpecError(f"mean_size {self.mean_size} exceeds item_count {self.item_count}")
        if not 0 <= self.seed < 2**64:
            raise SpecError("seed must be an unsigned 64-bit integer")


def item_tokens(n: int) -> list:
    width = len(str(n))
    return [f"I{i:0{width}d}" for i in range(1, n + 1)]


def generate_synthetic(spec: GeneratorSpec) -> TransactionDatabase:
    tokens = item_tokens(spec.item_count)
    # Independent child streams for sizes and item draws.
    size_seq, item_seq = np.random.SeedSequence(spec.seed).spawn(2)
    size_rng = np.random.Generator(np.random.PCG64(size_seq))
    item_rng = np.random.Generator(np.random.PCG64(item_seq))
    sd = max(1.0, spec.mean_size / 2)
    sizes = np.clip(np.rint(size_rng.normal(spec.mean_size, sd, spec.transaction_count)), 1, spec.item_count)
    rows = []
    for size in sizes.astype(int).tolist():
        picks = item_rng.choice(spec.item_count, size=size, replace=False)
        rows.append([tokens[i] for i in picks.tolist()])
    return TransactionDatabase.from_rows(rows, universe=tokens)


def write_transactions(db: TransactionDatabase, path, separator: str = "comma"):
    with io.open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_transactions(db, separator))
