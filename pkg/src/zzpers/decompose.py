"""Interval decomposition of a zigzag module by a single left-to-right pass."""

from __future__ import annotations

from dataclasses import dataclass, field

from .filtration import FiltrationRep, InvariantViolation, birth_time_index, rf_init, rf_step
from .zigzag import Barcode, ZigzagModule, validate


@dataclass
class DecompositionTrace:
    """Per-index bookkeeping of a decomposition (lists indexed by ``k - 1``).

    ``r[k-1]`` are the subquotient dimensions of the right-filtration of
    ``V[1, k]``, ``bt[k-1]`` its birth-time index and ``c[k-1]`` the
    multiplicities of the intervals ``[bt[k-1][i], k]``.
    """

    tau: str
    r: list[tuple[int, ...]] = field(default_factory=list)
    bt: list[tuple[int, ...]] = field(default_factory=list)
    c: list[tuple[int, ...]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "type": self.tau,
            "r": [list(x) for x in self.r],
            "bt": [list(x) for x in self.bt],
            "c": [list(x) for x in self.c],
        }


def multiplicities_from_dims(r: list[tuple[int, ...]], tau: str) -> list[tuple[int, ...]]:
    """Interval multiplicities from the table of filtration dimensions.

    With ``r[n] = 0``: across an ``f`` arrow ``c_i = r^k_i - r^{k+1}_i``, across
    a ``g`` arrow ``c_i = r^k_i - r^{k+1}_{i+1}``.

    Raises:
        InvariantViolation: if any multiplicity comes out negative.
    """
    n = len(r)
    if len(tau) != n - 1:
        raise ValueError(f"type {tau!r} does not match {n} filtration levels")
    table = []
    for k in range(1, n + 1):
        cur = r[k - 1]
        if k == n:
            c = tuple(cur)
        elif tau[k - 1] == "f":
            c = tuple(cur[i] - r[k][i] for i in range(k))
        else:
            c = tuple(cur[i] - r[k][i + 1] for i in range(k))
        if any(x < 0 for x in c):
            raise InvariantViolation(f"negative multiplicity at k={k}: {c}")
        table.append(c)
    return table


def right_filtrations(m: ZigzagModule) -> list[FiltrationRep]:
    """The filtration representations on ``V_1 .. V_n`` produced by the echelon pass."""
    p = m.p
    mats = [mat.copy() for mat in m.maps]
    reps = [rf_init(m.dims[0])]
    for k in range(1, m.n):
        nxt = mats[k] if k < m.n - 1 else None
        nxt_arrow = m.tau[k] if k < m.n - 1 else None
        rep, mats[k - 1], nxt = rf_step(reps[-1], m.tau[k - 1], mats[k - 1], p, nxt, nxt_arrow)
        if nxt is not None:
            mats[k] = nxt
        if sum(rep.dims) != m.dims[k]:
            raise InvariantViolation(f"filtration on V_{k + 1} has total dim {sum(rep.dims)} != {m.dims[k]}")
        reps.append(rep)
    return reps


def decompose(m: ZigzagModule) -> tuple[Barcode, DecompositionTrace]:
    """Compute ``Pers(m)`` together with the r/bt/c tables."""
    validate(m)
    reps = right_filtrations(m)
    trace = DecompositionTrace(m.tau)
    trace.r = [rep.dims for rep in reps]
    trace.bt = [birth_time_index(m.tau[: k - 1]) for k in range(1, m.n + 1)]
    trace.c = multiplicities_from_dims(trace.r, m.tau)
    counts = {}
    for k, (bt, c) in enumerate(zip(trace.bt, trace.c), start=1):
        for b, mult in zip(bt, c):
            if mult:
                counts[(b, k, None)] = counts.get((b, k, None), 0) + mult
    bc = Barcode(counts)
    if sum((d - b + 1) * mult for b, d, mult, _ in bc.entries()) != sum(m.dims):
        raise InvariantViolation("interval lengths do not account for the total dimension")
    return bc, trace


def pers(m: ZigzagModule) -> Barcode:
    """Barcode only."""
    return decompose(m)[0]
