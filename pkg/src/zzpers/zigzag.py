"""Zigzag modules, interval modules and barcodes.

Indices follow the 1-based convention: a module of length ``n`` has spaces
``V_1 .. V_n`` and arrows ``1 .. n-1``; arrow ``i`` joins ``V_i`` and
``V_{i+1}``.  The type is a string over ``{"f", "g"}``: ``"f"`` is a forward
map ``V_i -> V_{i+1}`` stored as an ``a_{i+1} x a_i`` matrix, ``"g"`` is a
backward map ``V_{i+1} -> V_i`` stored as an ``a_i x a_{i+1}`` matrix.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .field import FieldSpec, as_matrix, identity, inverse, mat_mul, zeros


class ShapeError(ValueError):
    """A module's matrices disagree with its dimension vector or type."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def check_type(tau: str) -> str:
    tau = tau.lower()
    if any(ch not in "fg" for ch in tau):
        raise ValueError(f"type must be a string over 'f'/'g', got {tau!r}")
    return tau


def reverse_type(tau: str) -> str:
    """Type of the reversed diagram: read backwards, every arrow flipped."""
    return "".join("g" if ch == "f" else "f" for ch in reversed(tau))


def arrow_shape(tau: str, dims: Sequence[int], i: int) -> tuple[int, int]:
    """Expected matrix shape of arrow ``i`` (1-based)."""
    if tau[i - 1] == "f":
        return dims[i], dims[i - 1]
    return dims[i - 1], dims[i]


@dataclass(eq=False)
class ZigzagModule:
    """A zigzag diagram of spaces ``GF(p)^{a_i}`` and matrices between them."""

    p: int
    tau: str
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...] = field(default=())

    def __post_init__(self):
        FieldSpec(self.p)
        self.tau = check_type(self.tau)
        self.dims = tuple(int(a) for a in self.dims)
        self.maps = tuple(np.asarray(m, dtype=np.int64) % self.p for m in self.maps)
        validate(self)

    @property
    def n(self) -> int:
        return len(self.dims)

    def arrow(self, i: int) -> np.ndarray:
        """Matrix of arrow ``i`` (1-based)."""
        return self.maps[i - 1]

    def __eq__(self, other):
        if not isinstance(other, ZigzagModule):
            return NotImplemented
        return (
            self.p == other.p
            and self.tau == other.tau
            and self.dims == other.dims
            and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps))
        )

    def __repr__(self):
        return f"ZigzagModule(p={self.p}, tau={self.tau!r}, dims={self.dims})"

    @classmethod
    def from_lists(cls, p: int, tau: str, dims: Sequence[int], maps: Sequence) -> "ZigzagModule":
        """Build from nested lists; empty matrices get their shape from ``dims``."""
        tau = check_type(tau)
        dims = tuple(dims)
        if len(maps) != len(tau):
            raise ShapeError(f"{len(tau)} arrows but {len(maps)} matrices")
        mats = []
        for i, m in enumerate(maps, start=1):
            try:
                mats.append(as_matrix(m, p, arrow_shape(tau, dims, i)))
            except (ValueError, IndexError) as exc:
                raise ShapeError(f"arrow {i}: {exc}", i) from None
        return cls(p, tau, dims, tuple(mats))


def validate(m: ZigzagModule) -> None:
    """Raise :class:`ShapeError` naming the first inconsistent arrow."""
    if len(m.dims) < 1:
        raise ShapeError("a module needs at least one space")
    if any(a < 0 for a in m.dims):
        raise ShapeError("dimensions must be non-negative")
    if len(m.tau) != len(m.dims) - 1:
        raise ShapeError(f"type {m.tau!r} has {len(m.tau)} arrows for {len(m.dims)} spaces")
    if len(m.maps) != len(m.tau):
        raise ShapeError(f"{len(m.tau)} arrows but {len(m.maps)} matrices")
    for i, mat in enumerate(m.maps, start=1):
        want = arrow_shape(m.tau, m.dims, i)
        if mat.ndim != 2 or mat.shape != want:
            raise ShapeError(f"arrow {i}: expected {want}, got {mat.shape}", i)


def zero_module(tau: str, p: int = 2) -> ZigzagModule:
    tau = check_type(tau)
    dims = (0,) * (len(tau) + 1)
    return ZigzagModule(p, tau, dims, tuple(zeros(0, 0) for _ in tau))


def interval_module(tau: str, b: int, d: int, p: int = 2) -> ZigzagModule:
    """The interval module ``I(b, d)``: a copy of the field on ``[b, d]``."""
    tau = check_type(tau)
    n = len(tau) + 1
    if not 1 <= b <= d <= n:
        raise ValueError(f"need 1 <= b <= d <= {n}, got [{b}, {d}]")
    dims = tuple(1 if b <= i <= d else 0 for i in range(1, n + 1))
    maps = []
    for i in range(1, n):
        rows, cols = arrow_shape(tau, dims, i)
        maps.append(np.ones((rows, cols), dtype=np.int64))
    return ZigzagModule(p, tau, dims, tuple(maps))


def direct_sum(a: ZigzagModule, b: ZigzagModule) -> ZigzagModule:
    """External direct sum; maps are block diagonal."""
    if a.p != b.p:
        raise ValueError(f"field mismatch: GF({a.p}) vs GF({b.p})")
    if a.tau != b.tau:
        raise ValueError(f"type mismatch: {a.tau!r} vs {b.tau!r}")
    maps = []
    for ma, mb in zip(a.maps, b.maps):
        block = zeros(ma.shape[0] + mb.shape[0], ma.shape[1] + mb.shape[1])
        block[: ma.shape[0], : ma.shape[1]] = ma
        block[ma.shape[0]:, ma.shape[1]:] = mb
        maps.append(block)
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    return ZigzagModule(a.p, a.tau, dims, tuple(maps))


def direct_sum_all(modules: Iterable[ZigzagModule], tau: str, p: int) -> ZigzagModule:
    out = zero_module(tau, p)
    for m in modules:
        out = direct_sum(out, m)
    return out


def change_basis(m: ZigzagModule, bases: Sequence[np.ndarray]) -> ZigzagModule:
    """Rewrite ``m`` in new bases.

    ``bases[i-1]`` holds the new basis of ``V_i`` as columns (in old
    coordinates).  A forward matrix becomes ``B_{i+1}^-1 M B_i`` and a
    backward one ``B_i^-1 N B_{i+1}``.
    """
    if len(bases) != m.n:
        raise ValueError(f"need {m.n} basis matrices, got {len(bases)}")
    p = m.p
    inverses = []
    for i, (bmat, a) in enumerate(zip(bases, m.dims), start=1):
        if bmat.shape != (a, a):
            raise ValueError(f"basis {i} must be {a}x{a}, got {bmat.shape}")
        inverses.append(inverse(bmat, p))  # raises on singular input
    maps = []
    for i, mat in enumerate(m.maps):
        if m.tau[i] == "f":
            maps.append(mat_mul(mat_mul(inverses[i + 1], mat, p), bases[i], p))
        else:
            maps.append(mat_mul(mat_mul(inverses[i], mat, p), bases[i + 1], p))
    return ZigzagModule(p, m.tau, m.dims, tuple(maps))


def restrict(m: ZigzagModule, lo: int, hi: int) -> ZigzagModule:
    """The sub-diagram on indices ``lo .. hi`` (1-based, inclusive)."""
    if not 1 <= lo <= hi <= m.n:
        raise ValueError(f"window [{lo}, {hi}] outside 1..{m.n}")
    return ZigzagModule(m.p, m.tau[lo - 1: hi - 1], m.dims[lo - 1: hi], m.maps[lo - 1: hi - 1])


def reverse(m: ZigzagModule) -> ZigzagModule:
    """Reversed diagram; matrices are reattached unchanged."""
    return ZigzagModule(m.p, reverse_type(m.tau), m.dims[::-1], m.maps[::-1])


def concat(left: ZigzagModule, arrow: str, mat: np.ndarray, right: ZigzagModule) -> ZigzagModule:
    """Join two modules with one extra arrow between ``left``'s last and ``right``'s first space."""
    if left.p != right.p:
        raise ValueError("field mismatch")
    return ZigzagModule(
        left.p,
        left.tau + arrow + right.tau,
        left.dims + right.dims,
        left.maps + (np.asarray(mat, dtype=np.int64),) + right.maps,
    )


def identity_bases(m: ZigzagModule) -> list[np.ndarray]:
    return [identity(a) for a in m.dims]


def _dim_key(dim):
    return -1 if dim is None else dim


class Barcode:
    """A multiset of integer intervals ``[b, d]`` with optional homological dimension.

    Entries are keyed by ``(b, d, dim)`` with ``dim`` possibly ``None``.
    ``grid`` holds display labels for indices ``1..n``; equality ignores it.
    """

    def __init__(self, counts=None, grid: Sequence[str] | None = None):
        self._counts: Counter = Counter()
        for key, mult in dict(counts or {}).items():
            b, d, dm = key if len(key) == 3 else (*key, None)
            if not b <= d:
                raise ValueError(f"bad interval [{b}, {d}]")
            if mult < 0:
                raise ValueError(f"negative multiplicity for [{b}, {d}]")
            if mult:
                self._counts[(int(b), int(d), dm)] += int(mult)
        self.grid = list(grid) if grid is not None else None

    @classmethod
    def from_intervals(cls, intervals: Iterable, grid=None) -> "Barcode":
        counts: Counter = Counter()
        for iv in intervals:
            iv = tuple(iv)
            counts[iv if len(iv) == 3 else (*iv, None)] += 1
        return cls(counts, grid)

    def entries(self) -> list[tuple[int, int, int, int | None]]:
        """Canonically ordered ``(b, d, multiplicity, dim)`` tuples."""
        keys = sorted(self._counts, key=lambda k: (k[0], k[1], _dim_key(k[2])))
        return [(b, d, self._counts[(b, d, dm)], dm) for b, d, dm in keys]

    def intervals(self) -> list[tuple[int, int]]:
        """Expanded list with repetition, in canonical order, dimension dropped."""
        out = []
        for b, d, mult, _ in self.entries():
            out.extend([(b, d)] * mult)
        return out

    def multiplicity(self, b: int, d: int, dim=None) -> int:
        return self._counts.get((b, d, dim), 0)

    def total(self) -> int:
        return sum(self._counts.values())

    def dims(self) -> set:
        return {k[2] for k in self._counts}

    def in_dim(self, dim) -> "Barcode":
        """Entries tagged with ``dim``, with the tag stripped."""
        return Barcode({(b, d, None): c for (b, d, dm), c in self._counts.items() if dm == dim}, self.grid)

    def with_dim(self, dim) -> "Barcode":
        return Barcode({(b, d, dim): c for (b, d, _), c in self._counts.items()}, self.grid)

    def containing(self, k: int) -> "Barcode":
        return Barcode({key: c for key, c in self._counts.items() if key[0] <= k <= key[1]}, self.grid)

    def restrict(self, K: Iterable[int]) -> "Barcode":
        """``{ I ∩ K : I ∩ K nonempty }``.

        Each ``I ∩ K`` is stored as ``[min, max]`` of the intersection; since
        ``I`` is an interval this pair determines the set.
        """
        K = sorted(set(K))
        counts: Counter = Counter()
        for (b, d, dm), c in self._counts.items():
            hit = [x for x in K if b <= x <= d]
            if hit:
                counts[(hit[0], hit[-1], dm)] += c
        return Barcode(counts, self.grid)

    def map_endpoints(self, fn) -> "Barcode":
        counts: Counter = Counter()
        for (b, d, dm), c in self._counts.items():
            nb, nd = fn(b, d)
            counts[(nb, nd, dm)] += c
        return Barcode(counts, self.grid)

    def __add__(self, other: "Barcode") -> "Barcode":
        return Barcode(self._counts + other._counts, self.grid or other.grid)

    def __eq__(self, other):
        if not isinstance(other, Barcode):
            return NotImplemented
        return self._counts == other._counts

    def __len__(self):
        return len(self._counts)

    def __iter__(self):
        return iter(self.entries())

    def __repr__(self):
        parts = []
        for b, d, mult, dm in self.entries():
            s = f"[{b},{d}]"
            if dm is not None:
                s += f"_{dm}"
            if mult > 1:
                s += f"x{mult}"
            parts.append(s)
        return "Barcode{" + ", ".join(parts) + "}"


def barcode_restrict(bc: Barcode, K: Iterable[int]) -> Barcode:
    return bc.restrict(K)


def reflect_barcode(bc: Barcode, n: int) -> Barcode:
    """Image of a barcode under index reversal ``i -> n + 1 - i``."""
    return bc.map_endpoints(lambda b, d: (n + 1 - d, n + 1 - b))
