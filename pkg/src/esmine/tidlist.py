"""TID-lists and the merge-intersection kernels used by Eclat."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dataset import TID_BASE, Direction, TransactionDB, compute_order

TidList = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class IntersectOutcome:
    result: TidList
    comparisons: int
    early_stopped: bool = False
    skipped_u: int = 0
    skipped_v: int = 0
    # 1-based cursor positions when the loop ended
    i: int = 1
    j: int = 1


def build_tidlists(db: TransactionDB, minsup: int) -> list[tuple[int, TidList]]:
    """Vertical layout of the frequent items, in ascending frequency order."""
    order = compute_order(db, minsup, Direction.ASCENDING)
    wanted = set(order.items)
    lists: dict[int, list[int]] = {item: [] for item in order.items}
    for tid, t in enumerate(db.transactions, start=TID_BASE):
        for item in t:
            if item in wanted:
                lists[item].append(tid)
    return [(item, tuple(lists[item])) for item in order.items]


def intersect(U: Sequence[int], V: Sequence[int]) -> IntersectOutcome:
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    steps = 0
    while i < nu and j < nv:
        steps += 1
        a, b = U[i], V[j]
        if a == b:
            z.append(a)
            i += 1
            j += 1
        elif a < b:
            i += 1
        else:
            j += 1
    return IntersectOutcome(tuple(z), steps, i=i + 1, j=j + 1)


def intersect_es(U: Sequence[int], V: Sequence[int], minsup: int) -> IntersectOutcome:
    """Like :func:`intersect`, but gives up as soon as either side has fewer
    than ``minsup`` elements left that could still match.

    On a stop the partial result is returned; its size is below ``minsup``.
    """
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    su = sv = 0
    steps = 0
    stopped = False
    while i < nu and j < nv:
        steps += 1
        a, b = U[i], V[j]
        if a == b:
            z.append(a)
            i += 1
            j += 1
        elif a < b:
            i += 1
            su += 1
            if nu - su < minsup:
                stopped = True
                break
        else:
            j += 1
            sv += 1
            if nv - sv < minsup:
                stopped = True
                break
    return IntersectOutcome(tuple(z), steps, stopped, su, sv, i + 1, j + 1)
