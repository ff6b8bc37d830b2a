"""Frequent itemset mining with early-stopping list intersections."""
from .dataset import (
    Direction,
    ItemOrder,
    ParseError,
    SupportThreshold,
    TransactionDB,
    compute_order,
    generate_synthetic,
    item_frequencies,
    parse_fimi,
    read_fimi,
    reorder_and_prune,
    resolve_minsup,
    write_fimi,
)
from .oracle import brute_force_mine, support_of
from .search import ALL_SCHEMES, Algorithm, MiningResult, RunMetrics, Scheme, mine

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEMES", "Algorithm", "Direction", "ItemOrder", "MiningResult",
    "ParseError", "RunMetrics", "Scheme", "SupportThreshold", "TransactionDB",
    "brute_force_mine", "compute_order", "generate_synthetic", "item_frequencies",
    "mine", "parse_fimi", "read_fimi", "reorder_and_prune", "resolve_minsup",
    "support_of", "write_fimi",
]
