"""Intervals through a single index from the right/left bifiltration on ``V_k``.

This path uses only explicit subspace algebra; it shares no elimination
bookkeeping with :mod:`zzpers.decompose` and serves as its cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import subspace as sub
from .filtration import birth_time_index, death_time_index, rf_abstract
from .zigzag import Barcode, ZigzagModule, restrict, reverse


def left_filtration(m: ZigzagModule, k: int) -> list[np.ndarray]:
    """``(L_0, ..., L_{n+1-k})`` on ``V_k``: the right-filtration of the reversed tail ``m[k, n]``."""
    if not 1 <= k <= m.n:
        raise ValueError(f"k={k} outside 1..{m.n}")
    return rf_abstract(reverse(restrict(m, k, m.n)))


@dataclass
class BifiltrationDims:
    k: int
    right: tuple[int, ...]  # dim R_0 .. dim R_k
    left: tuple[int, ...]  # dim L_0 .. dim L_{n+1-k}
    table: np.ndarray  # table[i, j] = dim(R_i ∩ L_j)


def bifiltration_dims(m: ZigzagModule, k: int) -> BifiltrationDims:
    if not 1 <= k <= m.n:
        raise ValueError(f"k={k} outside 1..{m.n}")
    p = m.p
    R = rf_abstract(m, k)
    L = left_filtration(m, k)
    table = np.zeros((len(R), len(L)), dtype=np.int64)
    for i, ri in enumerate(R):
        for j, lj in enumerate(L):
            table[i, j] = sub.dim(sub.intersect(ri, lj, p))
    return BifiltrationDims(k, tuple(sub.dim(x) for x in R), tuple(sub.dim(x) for x in L), table)


def localize_at(m: ZigzagModule, k: int) -> Barcode:
    """All intervals of ``Pers(m)`` containing ``k``, with multiplicities."""
    bif = bifiltration_dims(m, k)
    t = bif.table
    bt = birth_time_index(m.tau[: k - 1])
    dt = death_time_index(m.tau, k)
    counts = {}
    for i in range(1, t.shape[0]):
        for j in range(1, t.shape[1]):
            c = int(t[i, j] - t[i - 1, j] - t[i, j - 1] + t[i - 1, j - 1])
            if c < 0:
                raise ArithmeticError(f"negative bifiltration subquotient at ({i}, {j})")
            if c:
                key = (bt[i - 1], dt[j - 1], None)
                counts[key] = counts.get(key, 0) + c
    return Barcode(counts)
