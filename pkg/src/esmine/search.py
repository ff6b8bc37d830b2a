"""Depth-first generate-and-test mining shared by Eclat, dEclat and PrePost+."""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from . import diffset, nlist, tidlist
from .dataset import Direction, ItemOrder, TransactionDB, compute_order, reorder_and_prune


class Algorithm(enum.Enum):
    ECLAT = "eclat"
    DECLAT = "declat"
    PREPOST = "prepost"

    @property
    def label(self) -> str:
        return {"eclat": "Eclat", "declat": "dEclat", "prepost": "PrePost+"}[self.value]


@dataclass(frozen=True)
class Scheme:
    algorithm: Algorithm
    es: bool = False

    @property
    def name(self) -> str:
        if self.algorithm is Algorithm.PREPOST:
            return "PrePost+ES" if self.es else "PrePost+"
        return self.algorithm.label + ("-ES" if self.es else "")

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        """Accepts ``eclat``, ``declat-es``, ``PrePost+ES`` and similar."""
        key = text.strip().lower().replace("+", "").replace("_", "-")
        es = key.endswith("es") and key not in ("eclat", "declat")
        if es:
            key = key[:-2].rstrip("-")
        try:
            return cls(Algorithm(key), es)
        except ValueError:
            raise ValueError(f"unknown scheme: {text!r}") from None

    def __str__(self):
        return self.name


ALL_SCHEMES = tuple(Scheme(a, es) for a in Algorithm for es in (False, True))


@dataclass
class RunMetrics:
    num_candidates: int = 0
    num_expanded: int = 0
    num_frequent: int = 0
    num_comparisons: int = 0
    runtime: float = 0.0  # seconds, search phase only

    def count_candidate(self) -> "RunMetrics":
        self.num_candidates += 1
        return self

    def count_expansion(self) -> "RunMetrics":
        self.num_expanded += 1
        return self

    def add_comparisons(self, k: int) -> "RunMetrics":
        self.num_comparisons += k
        return self

    @property
    def ratio(self) -> float | None:
        if self.num_expanded == 0:
            return None
        return self.num_candidates / self.num_expanded

    def counters(self) -> tuple[int, int, int, int]:
        return (self.num_candidates, self.num_expanded, self.num_frequent,
                self.num_comparisons)


@dataclass
class MiningResult:
    # (itemset with ascending item ids, support), in DFS discovery order
    frequent: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    metrics: RunMetrics = field(default_factory=RunMetrics)
    order: tuple[int, ...] = ()

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.frequent)

    def lines(self) -> list[str]:
        return [" ".join(map(str, items)) + f" ({sup})" for items, sup in self.frequent]


class _Node(NamedTuple):
    item: int
    payload: object
    support: int


# combine(px, py, depth) -> (payload, support, comparisons); depth is the
# size of px's itemset.
Combine = Callable[[_Node, _Node, int], tuple[object, int, int]]


def _eclat_combine(es: bool, minsup: int) -> Combine:
    if es:
        kernel = tidlist.intersect_es

        def combine(px, py, depth):
            out = kernel(px.payload, py.payload, minsup)
            return out.result, len(out.result), out.comparisons
    else:
        kernel = tidlist.intersect

        def combine(px, py, depth):
            out = kernel(px.payload, py.payload)
            return out.result, len(out.result), out.comparisons
    return combine


def _declat_combine(es: bool, minsup: int) -> Combine:
    # Level 1 holds tidlists: D(xy) = T(x) - T(y). Deeper levels hold
    # diffsets: D(Pxy) = D(Py) - D(Px). Either way rho(Pxy) = rho(Px) - |D|.
    if es:
        kernel = diffset.difference_es

        def combine(px, py, depth):
            if depth == 1:
                out = kernel(px.payload, py.payload, px.support, minsup)
            else:
                out = kernel(py.payload, px.payload, px.support, minsup)
            return out.result, px.support - len(out.result), out.comparisons
    else:
        kernel = diffset.difference

        def combine(px, py, depth):
            if depth == 1:
                out = kernel(px.payload, py.payload)
            else:
                out = kernel(py.payload, px.payload)
            return out.result, px.support - len(out.result), out.comparisons
    return combine


def _prepost_combine(es: bool, minsup: int) -> Combine:
    support = nlist.nl_support
    if es:
        kernel = nlist.nl_intersect_es

        def combine(px, py, depth):
            out = kernel(px.payload, py.payload, py.support, minsup)
            return out.result, support(out.result), out.comparisons
    else:
        kernel = nlist.nl_intersect

        def combine(px, py, depth):
            out = kernel(px.payload, py.payload)
            return out.result, support(out.result), out.comparisons
    return combine


def _first_level(db: TransactionDB, minsup: int, algorithm: Algorithm,
                 order: ItemOrder) -> list[_Node]:
    if algorithm is Algorithm.PREPOST:
        # The tree must be built in exactly the reverse of the search order so
        # that x before y in the search always puts y-nodes above x-nodes.
        tree_order = order.reversed()
        tree = nlist.build_ppc_tree(reorder_and_prune(db, tree_order))
        nls = nlist.extract_nlists(nlist.assign_pre_post(tree), tree_order)
        return [_Node(x, nls[x], order.support[x]) for x in order.items]
    tids = dict(tidlist.build_tidlists(db, minsup))
    return [_Node(x, tids[x], len(tids[x])) for x in order.items]


_COMBINERS = {
    Algorithm.ECLAT: _eclat_combine,
    Algorithm.DECLAT: _declat_combine,
    Algorithm.PREPOST: _prepost_combine,
}


def mine(db: TransactionDB, minsup: int, scheme: Scheme | str) -> MiningResult:
    """Mine every itemset with support >= ``minsup``.

    All schemes walk the same search tree: prefix classes over the frequent
    items in ascending frequency order (ties by item id), pairing each node
    with every later sibling.
    """
    if isinstance(scheme, str):
        scheme = Scheme.parse(scheme)
    if int(minsup) != minsup or minsup < 1:
        raise ValueError(f"minsup must be a positive integer, got {minsup!r}")
    minsup = int(minsup)

    order = compute_order(db, minsup, Direction.ASCENDING)
    roots = _first_level(db, minsup, scheme.algorithm, order)
    combine = _COMBINERS[scheme.algorithm](scheme.es, minsup)

    metrics = RunMetrics()
    frequent: list[tuple[tuple[int, ...], int]] = []
    emit = frequent.append
    candidates = expanded = comparisons = 0

    # Explicit stack of (class, position, prefix) frames.
    start = time.perf_counter()
    stack = [(roots, 0, ())]
    while stack:
        klass, pos, prefix = stack.pop()
        if pos >= len(klass):
            continue
        stack.append((klass, pos + 1, prefix))
        px = klass[pos]
        itemset = prefix + (px.item,)
        emit((itemset, px.support))
        depth = len(itemset)
        children = []
        for py in klass[pos + 1:]:
            candidates += 1
            payload, sup, steps = combine(px, py, depth)
            comparisons += steps
            if sup >= minsup:
                expanded += 1
                children.append(_Node(py.item, payload, sup))
        if children:
            stack.append((children, 0, itemset))
    metrics.runtime = time.perf_counter() - start

    metrics.num_candidates = candidates
    metrics.num_expanded = expanded
    metrics.num_comparisons = comparisons
    metrics.num_frequent = len(frequent)
    return MiningResult(
        [(tuple(sorted(items)), sup) for items, sup in frequent], metrics, order.items)
