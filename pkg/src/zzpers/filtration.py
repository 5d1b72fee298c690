"""Right-filtrations, birth-time and death-time indices.

Two independent realisations of the right-filtration live here:

* :func:`rf_init` / :func:`rf_step` carry the filtration on ``V_k`` as a
  non-decreasing label function ``phi`` over a compatible basis, changing
  the basis of ``V_{k+1}`` by echelon elimination and mirroring every
  elementary operation onto the next matrix.
* :func:`rf_abstract` computes the same chain of subspaces with explicit
  images and preimages and never touches a basis.  It is the reference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import subspace as sub
from .field import col_echelon_bl, dual_ops, replay_cols, replay_rows, row_echelon
from .zigzag import ZigzagModule, check_type, reverse_type


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad input."""


def birth_time_index(tau: str) -> tuple[int, ...]:
    """Birth times of the right-filtration subquotients of a ``tau``-module.

    Starting from ``(1)``, an ``f`` appends ``n+1`` and a ``g`` prepends it.
    """
    bt = [1]
    for n, ch in enumerate(check_type(tau), start=1):
        if ch == "f":
            bt.append(n + 1)
        else:
            bt.insert(0, n + 1)
    return tuple(bt)


def death_time_index(tau: str, k: int) -> tuple[int, ...]:
    """Death times of the left-filtration subquotients on ``V_k``."""
    tau = check_type(tau)
    n = len(tau) + 1
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    tail = tau[k - 1:]
    return tuple(n + 1 - b for b in birth_time_index(reverse_type(tail)))


@dataclass(frozen=True)
class FiltrationRep:
    """Filtration ``0 = R_0 <= ... <= R_depth = V`` on a space with a compatible basis.

    ``R_i`` is spanned by the basis vectors ``q`` with ``phi[q] <= i``
    (``phi`` values are 1-based levels, listed per basis vector).
    """

    depth: int
    phi: tuple[int, ...]

    def __post_init__(self):
        if any(b < a for a, b in zip(self.phi, self.phi[1:])):
            raise InvariantViolation(f"phi is not non-decreasing: {self.phi}")
        if any(not 1 <= x <= self.depth for x in self.phi):
            raise InvariantViolation(f"phi values outside 1..{self.depth}: {self.phi}")

    @property
    def ambient_dim(self) -> int:
        return len(self.phi)

    @property
    def dims(self) -> tuple[int, ...]:
        """Subquotient dimensions ``r_i = dim R_i / R_{i-1}`` for ``i = 1..depth``."""
        counts = [0] * self.depth
        for x in self.phi:
            counts[x - 1] += 1
        return tuple(counts)

    def chain(self) -> list[np.ndarray]:
        """``R_0 .. R_depth`` as span bases in the current coordinates."""
        a = self.ambient_dim
        eye = np.eye(a, dtype=np.int64)
        return [eye[:, [q for q in range(a) if self.phi[q] <= i]] for i in range(self.depth + 1)]


def rf_init(a1: int) -> FiltrationRep:
    return FiltrationRep(1, (1,) * a1)


def _mirror(ops, into_next: bool, from_rows: bool, nxt: np.ndarray, p: int) -> np.ndarray:
    """Apply a basis change of ``V_{k+1}`` to the next arrow's matrix.

    ``from_rows`` says whether ``ops`` were row operations on a map into
    ``V_{k+1}`` (case f) or column operations on a map out of it (case g).
    ``into_next`` says whether the next matrix maps into ``V_{k+1}``.
    """
    if from_rows:
        return replay_rows(nxt, ops, p) if into_next else replay_cols(nxt, dual_ops(ops, p), p)
    return replay_rows(nxt, dual_ops(ops, p), p) if into_next else replay_cols(nxt, ops, p)


def rf_step(
    rep: FiltrationRep,
    arrow: str,
    mat: np.ndarray,
    p: int,
    nxt: np.ndarray | None = None,
    nxt_arrow: str | None = None,
) -> tuple[FiltrationRep, np.ndarray, np.ndarray | None]:
    """Propagate the filtration across one arrow.

    Args:
        rep: filtration on ``V_k`` in the basis ``mat`` is written against.
        arrow: ``"f"`` if ``mat`` maps ``V_k -> V_{k+1}``, ``"g"`` otherwise.
        mat: the matrix of arrow ``k``.
        p: field modulus.
        nxt: matrix of arrow ``k+1`` (or ``None`` at the end of the diagram);
            it absorbs the basis change of ``V_{k+1}``.
        nxt_arrow: direction of arrow ``k+1``.

    Returns:
        (filtration on ``V_{k+1}``, echelonised ``mat``, updated ``nxt``)
    """
    k = rep.depth
    mat = np.asarray(mat, dtype=np.int64)
    into_next = nxt_arrow == "g"  # a backward next arrow maps V_{k+2} into V_{k+1}
    if arrow == "f":
        if mat.shape[1] != rep.ambient_dim:
            raise ValueError(f"matrix has {mat.shape[1]} columns, filtration lives in dim {rep.ambient_dim}")
        ech, pivots, ops = row_echelon(mat, p)
        pivot_col = dict(pivots)
        phi = tuple(rep.phi[pivot_col[r]] if r in pivot_col else k + 1 for r in range(mat.shape[0]))
        if nxt is not None:
            nxt = _mirror(ops, into_next, True, nxt, p)
        return FiltrationRep(k + 1, phi), ech, nxt

    if arrow != "g":
        raise ValueError(f"arrow must be 'f' or 'g', got {arrow!r}")
    if mat.shape[0] != rep.ambient_dim:
        raise ValueError(f"matrix has {mat.shape[0]} rows, filtration lives in dim {rep.ambient_dim}")
    ech, pivots, ops = col_echelon_bl(mat, p)
    pivot_row = {c: r for r, c in pivots}
    raw = [rep.phi[pivot_row[c]] + 1 if c in pivot_row else 1 for c in range(mat.shape[1])]
    # pivot columns come out with decreasing phi; restore the order by a stable sort
    order = sorted(range(len(raw)), key=lambda c: raw[c])
    perm_ops = _permutation_swaps(order)
    ech = replay_cols(ech, perm_ops, p)
    ops = ops + perm_ops
    phi = tuple(raw[c] for c in order)
    if nxt is not None:
        nxt = _mirror(ops, into_next, False, nxt, p)
    return FiltrationRep(k + 1, phi), ech, nxt


def _permutation_swaps(order: list[int]) -> list[tuple]:
    """Swap transcript moving line ``order[j]`` into position ``j``."""
    current = list(range(len(order)))  # current[pos] = original line sitting at pos
    where = list(range(len(order)))  # where[line] = position of original line
    swaps = []
    for j, line in enumerate(order):
        pos = where[line]
        if pos != j:
            swaps.append(("swap", j, pos))
            other = current[j]
            current[j], current[pos] = line, other
            where[line], where[other] = j, pos
    return swaps


def rf_abstract(m: ZigzagModule, k: int | None = None) -> list[np.ndarray]:
    """Right-filtration ``(R_0, ..., R_k)`` of ``m[1, k]`` on ``V_k`` by direct subspace algebra."""
    n = m.n if k is None else k
    if not 1 <= n <= m.n:
        raise ValueError(f"k={k} outside 1..{m.n}")
    p = m.p
    chain = [sub.zero_space(m.dims[0]), sub.full_space(m.dims[0])]
    for i in range(1, n):
        mat = m.arrow(i)
        target = m.dims[i]
        if m.tau[i - 1] == "f":
            chain = [sub.image(mat, r, p) for r in chain] + [sub.full_space(target)]
        else:
            chain = [sub.zero_space(target)] + [sub.preimage(mat, r, p) for r in chain]
    return chain


def chain_dims(chain: list[np.ndarray]) -> tuple[int, ...]:
    """Subquotient dimensions of a chain of nested subspaces."""
    return tuple(sub.dim(b) - sub.dim(a) for a, b in zip(chain, chain[1:]))
