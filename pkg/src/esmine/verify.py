"""Cross-check all six scheme variants against the oracle and each other."""
from __future__ import annotations

import random

from .dataset import TransactionDB
from .oracle import brute_force_mine, closure_violations
from .search import ALL_SCHEMES, Algorithm, Scheme, mine


def _fmt(items) -> str:
    return "{" + ",".join(map(str, items)) + "}"


def verify_instance(db: TransactionDB, minsup: int) -> list[str]:
    """Every problem found, first divergence first; empty means all agree."""
    expected = brute_force_mine(db, minsup)
    problems: list[str] = []
    results = {s: mine(db, minsup, s) for s in ALL_SCHEMES}

    for scheme, res in results.items():
        got = res.as_dict()
        if len(got) != len(res.frequent):
            problems.append(f"{scheme}: duplicate itemsets in output")
        for items in sorted(set(expected) | set(got)):
            if got.get(items) != expected.get(items):
                problems.append(
                    f"{scheme}: itemset {_fmt(items)} support {got.get(items)} "
                    f"!= oracle {expected.get(items)}")
                break
        for sub, sup in closure_violations(got)[:1]:
            problems.append(f"{scheme}: downward closure broken at {_fmt(sub)} < {_fmt(sup)}")
        m = res.metrics
        if m.num_expanded > m.num_candidates:
            problems.append(f"{scheme}: expanded {m.num_expanded} > candidates {m.num_candidates}")

    for algo in Algorithm:
        std = results[Scheme(algo, False)]
        es = results[Scheme(algo, True)]
        if std.frequent != es.frequent:
            problems.append(f"{algo.label}: ES output differs from standard")
        if (std.metrics.num_candidates, std.metrics.num_expanded) != (
                es.metrics.num_candidates, es.metrics.num_expanded):
            problems.append(f"{algo.label}: ES changed candidate/expanded counts")
        if es.metrics.num_comparisons > std.metrics.num_comparisons:
            problems.append(
                f"{algo.label}: ES used more comparisons "
                f"({es.metrics.num_comparisons} > {std.metrics.num_comparisons})")

    counts = {(r.metrics.num_candidates, r.metrics.num_expanded) for r in results.values()}
    if len(counts) > 1:
        problems.append(f"candidate/expanded counts differ across schemes: {sorted(counts)}")
    return problems


def random_db(rng: random.Random, max_items: int = 12, max_trans: int = 30) -> TransactionDB:
    n_items = rng.randint(1, max_items)
    n_trans = rng.randint(1, max_trans)
    density = rng.uniform(0.1, 0.8)
    txs = [[i for i in range(n_items) if rng.random() < density] for _ in range(n_trans)]
    return TransactionDB.from_iterable(txs)


def fuzz(count: int, seed: int = 0, max_items: int = 12, max_trans: int = 30):
    """Yield ``(db, minsup, problems)`` for ``count`` random instances."""
    rng = random.Random(seed)
    for _ in range(count):
        db = random_db(rng, max_items, max_trans)
        minsup = rng.randint(1, db.n)
        yield db, minsup, verify_instance(db, minsup)
