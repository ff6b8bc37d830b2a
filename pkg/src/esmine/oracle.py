"""Brute-force reference miner. Slow on purpose; used to certify the others."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .dataset import TransactionDB, item_frequencies

MAX_FREQUENT_ITEMS = 24


class OracleRefused(ValueError):
    pass


def support_of(db: TransactionDB, itemset: Iterable[int]) -> int:
    wanted = set(itemset)
    return sum(1 for t in db.transactions if wanted.issubset(t))


def brute_force_mine(db: TransactionDB, minsup: int, max_k: int | None = None,
                     force: bool = False) -> dict[tuple[int, ...], int]:
    """Level-wise enumeration: join frequent k-itemsets sharing a (k-1)-prefix,
    drop joins with an infrequent k-subset, then count by scanning."""
    singles = sorted(i for i, c in item_frequencies(db).items() if c >= minsup)
    if len(singles) > MAX_FREQUENT_ITEMS and not force:
        raise OracleRefused(
            f"{len(singles)} frequent items exceeds the oracle limit of "
            f"{MAX_FREQUENT_ITEMS}; pass force=True to run anyway")
    txs = [frozenset(t) for t in db.transactions]
    result: dict[tuple[int, ...], int] = {}
    level = {(i,): support_of(db, (i,)) for i in singles}
    k = 1
    while level and (max_k is None or k <= max_k):
        result.update(level)
        keys = sorted(level)
        nxt = {}
        for a, b in combinations(keys, 2):
            if a[:-1] != b[:-1]:
                continue
            cand = a + (b[-1],)
            if any(sub not in level for sub in combinations(cand, k)):
                continue
            s = sum(1 for t in txs if t.issuperset(cand))
            if s >= minsup:
                nxt[cand] = s
        level = nxt
        k += 1
    return result


def closure_violations(result: dict[tuple[int, ...], int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(subset, superset) pairs breaking anti-monotonicity: every proper
    (k-1)-subset of a reported itemset must be reported with support at
    least the itemset's."""
    bad = []
    for items, sup in result.items():
        if len(items) < 2:
            continue
        for sub in combinations(sorted(items), len(items) - 1):
            if result.get(sub, -1) < sup:
                bad.append((sub, items))
    return bad
