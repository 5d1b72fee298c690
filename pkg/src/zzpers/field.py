"""Dense linear algebra over prime fields GF(p).

Matrices are plain 2-d ``numpy`` int64 arrays whose entries lie in
``[0, p)``.  Every routine takes the modulus explicitly.  Zero-row and
zero-column matrices are valid and stand for maps to or from the zero space.

Elimination routines return a transcript of elementary operations so that
callers can mirror basis changes onto neighbouring matrices.  A transcript is
a list of tuples:

    ("swap", i, j)           exchange lines i and j
    ("scale", i, c)          line i *= c
    ("add", t, s, lam)       line t += lam * line s

where "line" means row for :func:`row_echelon` and column for
:func:`col_echelon_bl`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Op = tuple


class NoSolution(ValueError):
    """Raised when a linear system has no solution."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not 2 <= self.p < 2**31:
            raise ValueError(f"modulus must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(int(self.p)):
            raise ValueError(f"modulus {self.p} is not prime")

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


def as_matrix(data, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce nested lists (or an array) to a reduced int64 matrix.

    ``shape`` disambiguates empty inputs such as ``[]`` for a 0x3 matrix.
    """
    a = np.array(data, dtype=np.int64)
    if shape is not None:
        if a.size == 0:
            a = np.zeros(shape, dtype=np.int64)
        elif a.shape != tuple(shape):
            raise ValueError(f"expected shape {tuple(shape)}, got {a.shape}")
    if a.ndim != 2:
        raise ValueError(f"matrix must be 2-dimensional, got shape {a.shape}")
    return a % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Matrix product over GF(p)."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    inner = a.shape[1]
    # int64 accumulation is exact while inner * (p-1)^2 < 2^63
    if inner == 0:
        return zeros(a.shape[0], b.shape[1])
    if inner * (p - 1) ** 2 < 2**62:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


def _row_add(m: np.ndarray, t: int, s: int, lam: int, p: int) -> None:
    m[t] = (m[t] + lam * m[s]) % p


def _col_add(m: np.ndarray, t: int, s: int, lam: int, p: int) -> None:
    m[:, t] = (m[:, t] + lam * m[:, s]) % p


def row_echelon(m: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, int]], list[Op]]:
    """Unreduced row echelon form using row operations only.

    Each of the top ``r`` rows has a 1 as its leftmost nonzero entry, pivots
    move strictly right going down, and the remaining rows are zero.  Columns
    are scanned left to right and the first nonzero row wins.

    Returns:
        (echelon matrix, pivots as (row, col) pairs, row-operation transcript)
    """
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    ops: list[Op] = []
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        src = r + int(nz[0])
        if src != r:
            m[[r, src]] = m[[src, r]]
            ops.append(("swap", r, src))
        lead = int(m[r, c])
        if lead != 1:
            c_inv = pow(lead, -1, p)
            m[r] = (m[r] * c_inv) % p
            ops.append(("scale", r, c_inv))
        for below in range(r + 1, rows):
            x = int(m[below, c])
            if x:
                _row_add(m, below, r, p - x, p)
                ops.append(("add", below, r, p - x))
        pivots.append((r, c))
        r += 1
    return m, pivots, ops


def col_echelon_bl(m: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, int]], list[Op]]:
    """Column echelon form anchored at the bottom left, column operations only.

    Each of the leftmost ``r`` columns has a 1 as its lowest nonzero entry,
    each pivot lies strictly lower than the pivots of the columns to its
    right, and the remaining columns are zero.  Rows are scanned bottom to
    top; within a row the first nonzero column wins.

    Returns:
        (echelon matrix, pivots as (row, col) pairs, column-operation transcript)
    """
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    ops: list[Op] = []
    pivots: list[tuple[int, int]] = []
    c = 0
    for row in range(rows - 1, -1, -1):
        if c == cols:
            break
        nz = np.flatnonzero(m[row, c:])
        if nz.size == 0:
            continue
        src = c + int(nz[0])
        if src != c:
            m[:, [c, src]] = m[:, [src, c]]
            ops.append(("swap", c, src))
        lead = int(m[row, c])
        if lead != 1:
            c_inv = pow(lead, -1, p)
            m[:, c] = (m[:, c] * c_inv) % p
            ops.append(("scale", c, c_inv))
        for right in range(c + 1, cols):
            x = int(m[row, right])
            if x:
                _col_add(m, right, c, p - x, p)
                ops.append(("add", right, c, p - x))
        pivots.append((row, c))
        c += 1
    return m, pivots, ops


def replay_rows(m: np.ndarray, ops: list[Op], p: int) -> np.ndarray:
    """Apply a transcript of row operations to a copy of ``m``."""
    m = np.array(m, dtype=np.int64) % p
    for op in ops:
        if op[0] == "swap":
            m[[op[1], op[2]]] = m[[op[2], op[1]]]
        elif op[0] == "scale":
            m[op[1]] = (m[op[1]] * op[2]) % p
        else:
            _row_add(m, op[1], op[2], op[3], p)
    return m


def replay_cols(m: np.ndarray, ops: list[Op], p: int) -> np.ndarray:
    """Apply a transcript of column operations to a copy of ``m``."""
    return replay_rows(np.asarray(m).T, ops, p).T.copy()


def dual_ops(ops: list[Op], p: int) -> list[Op]:
    """Translate a transcript acting on one side of a basis into the other side.

    Row operations ``T`` on a map into a space ``V`` change the basis of ``V``;
    any map out of ``V`` must be right-multiplied by ``T^-1``.  This returns
    the column transcript realising ``B -> B T^-1`` (and symmetrically turns a
    column transcript ``S`` into the row transcript for ``S^-1 A``).
    """
    out: list[Op] = []
    for op in ops:
        if op[0] == "swap":
            out.append(op)
        elif op[0] == "scale":
            out.append(("scale", op[1], pow(int(op[2]), -1, p)))
        else:
            _, t, s, lam = op
            out.append(("add", s, t, (-lam) % p))
    return out


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        src = r + int(nz[0])
        if src != r:
            m[[r, src]] = m[[src, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for other in range(rows):
            if other != r and m[other, c]:
                m[other] = (m[other] - int(m[other, c]) * m[r]) % p
        pivot_cols.append(c)
        r += 1
    return m, pivot_cols


def rank(m: np.ndarray, p: int) -> int:
    return len(row_echelon(m, p)[1])


def kernel(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the null space of ``m`` as the columns of a matrix."""
    rows, cols = m.shape
    red, pivot_cols = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivot_cols)]
    basis = zeros(cols, len(free))
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for i, pc in enumerate(pivot_cols):
            basis[pc, j] = (-red[i, fc]) % p
    return basis


def solve_linear(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Return some ``x`` with ``a @ x = b`` over GF(p).

    Raises:
        NoSolution: if a column of ``b`` lies outside the column space of ``a``.
    """
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    n = a.shape[1]
    aug = np.concatenate([np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)], axis=1)
    red, pivot_cols = rref(aug, p)
    if any(c >= n for c in pivot_cols):
        raise NoSolution("right-hand side is not in the column space")
    x = zeros(n, b.shape[1])
    for i, c in enumerate(pivot_cols):
        x[c] = red[i, n:]
    return x


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix; raises ``ValueError`` if singular."""
    n, cols = m.shape
    if n != cols:
        raise ValueError(f"not square: {m.shape}")
    try:
        return solve_linear(m, identity(n), p)
    except NoSolution:
        raise ValueError("matrix is singular") from None
