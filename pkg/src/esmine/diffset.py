"""Diffsets and the difference kernels used by dEclat.

Every kernel computes ``U \\ V``. Two tidlists at the first level give
``D(xy) = T(x) - T(y)``; deeper nodes use ``D(Pxy) = D(Py) - D(Px)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class InconsistentSupport(RuntimeError):
    pass


@dataclass(frozen=True, slots=True)
class DiffList:
    tids: tuple[int, ...]
    owner_support: int


@dataclass(frozen=True, slots=True)
class DiffOutcome:
    result: tuple[int, ...]
    comparisons: int
    early_stopped: bool = False
    i: int = 1
    j: int = 1


def difference(U: Sequence[int], V: Sequence[int]) -> DiffOutcome:
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    steps = 0
    while i < nu and j < nv:
        steps += 1
        a, b = U[i], V[j]
        if a == b:
            i += 1
            j += 1
        elif a < b:
            z.append(a)
            i += 1
        else:
            j += 1
    end_i = i
    if i < nu:
        z.extend(U[i:])
    return DiffOutcome(tuple(z), steps, i=end_i + 1, j=j + 1)


def difference_es(U: Sequence[int], V: Sequence[int], parent_support: int,
                  minsup: int) -> DiffOutcome:
    """:func:`difference` that returns the partial diffset as soon as
    ``parent_support - len(result)`` drops below ``minsup``."""
    z = []
    i = j = 0
    nu, nv = len(U), len(V)
    steps = 0
    while i < nu and j < nv:
        steps += 1
        a, b = U[i], V[j]
        if a == b:
            i += 1
            j += 1
        elif a < b:
            z.append(a)
            i += 1
            if parent_support - len(z) < minsup:
                return DiffOutcome(tuple(z), steps, True, i + 1, j + 1)
        else:
            j += 1
    end_i = i
    if i < nu:
        z.extend(U[i:])
    return DiffOutcome(tuple(z), steps, i=end_i + 1, j=j + 1)


def support_from_diffset(parent_support: int, diff_size: int) -> int:
    if diff_size > parent_support:
        raise InconsistentSupport(
            f"diffset of size {diff_size} exceeds parent support {parent_support}")
    return parent_support - diff_size


def first_level_diffset(Tx: Sequence[int], Ty: Sequence[int]) -> DiffList:
    diff = difference(Tx, Ty).result
    return DiffList(diff, support_from_diffset(len(Tx), len(diff)))
