"""Transaction databases: FIMI I/O, item ordering, pruning and synthetic data."""
from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

# Transaction identifiers are 1-based positions in file order.
TID_BASE = 1

Item = int
Transaction = tuple[int, ...]


class ParseError(ValueError):
    """Malformed FIMI input."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class TransactionDB:
    transactions: tuple[Transaction, ...]
    item_universe: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        txs = tuple(tuple(t) for t in self.transactions)
        object.__setattr__(self, "transactions", txs)
        if self.item_universe is None:
            object.__setattr__(self, "item_universe", frozenset(i for t in txs for i in t))

    @classmethod
    def from_iterable(cls, transactions: Iterable[Iterable[int]]) -> "TransactionDB":
        """Canonicalise: dedupe and sort every transaction by item id."""
        return cls(tuple(tuple(sorted(set(t))) for t in transactions))

    @property
    def n(self) -> int:
        return len(self.transactions)

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)


def parse_fimi(text: str | Iterable[str]) -> TransactionDB:
    lines = text.splitlines() if isinstance(text, str) else text
    transactions = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            continue
        items = set()
        for tok in tokens:
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(lineno, f"not an integer item id: {tok!r}") from None
            if value < 0:
                raise ParseError(lineno, f"negative item id: {value}")
            items.add(value)
        transactions.append(tuple(sorted(items)))
    return TransactionDB(tuple(transactions))


def write_fimi(db: TransactionDB) -> str:
    return "".join(" ".join(map(str, sorted(t))) + "\n" for t in db.transactions)


def read_fimi(path: str | Path) -> TransactionDB:
    with open(path, encoding="ascii") as fh:
        return parse_fimi(fh)


def save_fimi(db: TransactionDB, path: str | Path) -> None:
    Path(path).write_text(write_fimi(db), encoding="ascii")


def item_frequencies(db: TransactionDB) -> dict[int, int]:
    counts: Counter[int] = Counter()
    for t in db.transactions:
        counts.update(set(t))
    return dict(counts)


class Direction(enum.Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True)
class ItemOrder:
    """A total order over the frequent items, with their supports."""

    items: tuple[int, ...]
    direction: Direction
    support: dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def rank(self) -> dict[int, int]:
        return {item: pos for pos, item in enumerate(self.items)}

    def reversed(self) -> "ItemOrder":
        flipped = (Direction.DESCENDING if self.direction is Direction.ASCENDING
                   else Direction.ASCENDING)
        return ItemOrder(self.items[::-1], flipped, self.support)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def compute_order(db: TransactionDB, minsup: int,
                  direction: Direction | str = Direction.DESCENDING) -> ItemOrder:
    """Frequent items sorted by frequency; ties go to the smaller item id
    in both directions."""
    direction = Direction(direction)
    freq = {i: c for i, c in item_frequencies(db).items() if c >= minsup}
    if direction is Direction.ASCENDING:
        items = sorted(freq, key=lambda i: (freq[i], i))
    else:
        items = sorted(freq, key=lambda i: (-freq[i], i))
    return ItemOrder(tuple(items), direction, freq)


def reorder_and_prune(db: TransactionDB, order: ItemOrder) -> TransactionDB:
    # Transactions left empty are kept so that positions (TIDs) stay fixed.
    rank = order.rank
    out = []
    for t in db.transactions:
        kept = [i for i in t if i in rank]
        kept.sort(key=rank.__getitem__)
        out.append(tuple(kept))
    return TransactionDB(tuple(out), frozenset(order.items))


@dataclass(frozen=True)
class SupportThreshold:
    value: float
    relative: bool = False

    @classmethod
    def absolute(cls, count: int) -> "SupportThreshold":
        return cls(count, relative=False)

    @classmethod
    def fraction(cls, f: float) -> "SupportThreshold":
        return cls(f, relative=True)

    def __post_init__(self):
        if self.relative:
            if not 0 < self.value <= 1:
                raise ValueError(f"relative minsup must be in (0, 1], got {self.value}")
        elif int(self.value) != self.value or self.value < 1:
            raise ValueError(f"absolute minsup must be a positive integer, got {self.value}")


def resolve_minsup(spec: SupportThreshold | int, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if not isinstance(spec, SupportThreshold):
        spec = SupportThreshold.absolute(spec)
    if not spec.relative:
        return int(spec.value)
    if n == 0:
        raise ValueError("empty database: relative minsup is undefined")
    # Decimal round-trip keeps 0.3 * 10 == 3 exactly.
    return max(1, math.ceil(Fraction(repr(spec.value)) * n))


def generate_synthetic(n_trans: int, n_items: int, mean_len: float, seed: int,
                       skew: float = 1.0) -> TransactionDB:
    """Random baskets with Zipf-like item popularity.

    Item ``k`` is drawn with weight ``1 / (k + 1) ** skew``. Each transaction
    has ``1 + Poisson(mean_len - 1)`` items (clipped to ``n_items``), drawn
    without replacement.
    """
    if n_trans < 0:
        raise ValueError("n_trans must be >= 0")
    if n_items < 1:
        raise ValueError("n_items must be >= 1")
    if not 1 <= mean_len <= n_items:
        raise ValueError("mean_len must lie in [1, n_items]")
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, n_items + 1) ** skew
    weights /= weights.sum()
    lengths = np.minimum(1 + rng.poisson(mean_len - 1, size=n_trans), n_items)
    transactions = []
    for length in lengths:
        picked = rng.choice(n_items, size=int(length), replace=False, p=weights)
        transactions.append(tuple(sorted(int(i) for i in picked)))
    return TransactionDB(tuple(transactions))
