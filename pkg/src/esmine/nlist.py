"""PPC-tree, PP-codes and N-list intersection for PrePost+.

Node ``Y`` is an ancestor of node ``X`` iff ``Y.pre < X.pre`` and
``Y.post > X.post``. Ranks are 0-based; the root is not ranked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dataset import ItemOrder, TransactionDB


class PPCNode:
    __slots__ = ("name", "frequency", "children", "pre", "post")

    def __init__(self, name: int | None):
        self.name = name
        self.frequency = 0
        # insertion-ordered: the order children were created fixes the ranks
        self.children: dict[int, PPCNode] = {}
        self.pre = -1
        self.post = -1

    def __repr__(self):
        return f"PPCNode({self.name}, freq={self.frequency}, pre={self.pre}, post={self.post})"


class PPCTree:
    def __init__(self):
        self.root = PPCNode(None)
        self.size = 0
        self.ranked = False

    def insert(self, transaction: Sequence[int]) -> None:
        node = self.root
        for item in transaction:
            child = node.children.get(item)
            if child is None:
                child = node.children[item] = PPCNode(item)
                self.size += 1
            child.frequency += 1
            node = child

    def nodes(self):
        """Non-root nodes in pre-order."""
        stack = list(reversed(self.root.children.values()))
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children.values()))


class PPCode(NamedTuple):
    pre: int
    post: int
    freq: int


NList = tuple[PPCode, ...]


@dataclass(frozen=True, slots=True)
class NLOutcome:
    result: NList
    comparisons: int
    early_stopped: bool = False
    skip: int = 0
    # 1-based cursor positions when the loop ended
    i: int = 1
    j: int = 1


def build_ppc_tree(reordered_db: TransactionDB) -> PPCTree:
    tree = PPCTree()
    for t in reordered_db.transactions:
        tree.insert(t)
    return tree


def assign_pre_post(tree: PPCTree) -> PPCTree:
    pre = post = 0
    # (node, children-iterator) pairs; avoids recursion on deep trees
    stack = [(tree.root, iter(tree.root.children.values()))]
    while stack:
        node, it = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            if node is not tree.root:
                node.post = post
                post += 1
            continue
        child.pre = pre
        pre += 1
        stack.append((child, iter(child.children.values())))
    tree.ranked = True
    return tree


def extract_nlists(tree: PPCTree, order: ItemOrder | Sequence[int]) -> dict[int, NList]:
    if not tree.ranked:
        assign_pre_post(tree)
    lists: dict[int, list[PPCode]] = {item: [] for item in order}
    for node in tree.nodes():  # pre-order, so each list comes out sorted
        bucket = lists.get(node.name)
        if bucket is not None:
            bucket.append(PPCode(node.pre, node.post, node.frequency))
    return {item: tuple(codes) for item, codes in lists.items()}


def nl_support(nl: Sequence[PPCode]) -> int:
    return sum(code.freq for code in nl)


def merge_codes(codes: list[PPCode]) -> NList:
    """Sum the frequencies of adjacent codes that name the same node."""
    out: list[PPCode] = []
    for code in codes:
        if out and out[-1].pre == code.pre:
            last = out[-1]
            out[-1] = PPCode(last.pre, last.post, last.freq + code.freq)
        else:
            out.append(code)
    return tuple(out)


def nl_intersect(U: Sequence[PPCode], V: Sequence[PPCode]) -> NLOutcome:
    """N-list of ``xyS`` from ``U = NL(xS)`` (descendant side) and
    ``V = NL(yS)`` (ancestor side)."""
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    steps = 0
    while i < nu and j < nv:
        steps += 1
        x, y = U[i], V[j]
        if x.pre > y.pre:
            if x.post < y.post:
                z.append(PPCode(y.pre, y.post, x.freq))
                i += 1
            else:
                j += 1
        else:
            i += 1
    return NLOutcome(merge_codes(z), steps, i=i + 1, j=j + 1)


def nl_intersect_es(U: Sequence[PPCode], V: Sequence[PPCode], rho_v: int,
                    minsup: int) -> NLOutcome:
    """:func:`nl_intersect` that returns an empty N-list once the frequency
    still reachable in ``V`` falls below ``minsup``.

    ``skip`` only counts the part of a passed-over code's frequency that was
    not matched: a code in ``V`` may already have absorbed descendants from
    ``U`` before the cursor moves past it, and those contribute to the
    result.
    """
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    steps = 0
    skip = 0
    absorbed = 0  # frequency matched under V[j] so far
    while i < nu and j < nv:
        steps += 1
        x, y = U[i], V[j]
        if x.pre > y.pre:
            if x.post < y.post:
                z.append(PPCode(y.pre, y.post, x.freq))
                absorbed += x.freq
                i += 1
            else:
                skip += y.freq - absorbed
                if rho_v - skip < minsup:
                    return NLOutcome((), steps, True, skip, i + 1, j + 1)
                absorbed = 0
                j += 1
        else:
            i += 1
    return NLOutcome(merge_codes(z), steps, skip=skip, i=i + 1, j=j + 1)


def dump_tree(tree: PPCTree) -> str:
    """Indented text, one node per line: ``name freq pre post``."""
    if not tree.ranked:
        assign_pre_post(tree)
    lines = []
    stack = [(child, 0) for child in reversed(tree.root.children.values())]
    while stack:
        node, depth = stack.pop()
        lines.append(f"{'  ' * depth}{node.name} {node.frequency} {node.pre} {node.post}")
        stack.extend((c, depth + 1) for c in reversed(node.children.values()))
    return "\n".join(lines) + ("\n" if lines else "")
