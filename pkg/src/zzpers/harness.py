"""Seeded random instances with planted ground truth.

All randomness goes through :class:`SplitMix64` so that a seed produces the
same instance in any implementation that follows the same recipe:

    state += 0x9E3779B97F4A7C15            (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB   (mod 2^64)
    return z ^ (z >> 31)

``below(n)`` returns ``next() % n``.  The modulo bias is irrelevant at the
sizes used here and keeps the recipe trivial to port.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .field import identity, rank, zeros
from .zigzag import Barcode, ZigzagModule, arrow_shape, change_basis, direct_sum_all, interval_module

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


def _rng(seed_or_rng) -> SplitMix64:
    return seed_or_rng if isinstance(seed_or_rng, SplitMix64) else SplitMix64(int(seed_or_rng))


def random_matrix(rng, rows: int, cols: int, p: int) -> np.ndarray:
    rng = _rng(rng)
    m = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            m[i, j] = rng.below(p)
    return m


def random_invertible(rng, size: int, p: int, rounds: int | None = None) -> np.ndarray:
    """Product of random elementary matrices (shears, nonzero scalings, swaps).

    Generation never rejects, so it always succeeds.
    """
    rng = _rng(rng)
    m = identity(size)
    if size == 0:
        return m
    rounds = 3 * size * size if rounds is None else rounds
    for _ in range(rounds):
        kind = rng.below(3)
        i = rng.below(size)
        if kind == 0 and size > 1:
            j = rng.below(size - 1)
            j += j >= i
            lam = rng.below(p)
            m[i] = (m[i] + lam * m[j]) % p
        elif kind == 1 and p > 2:
            m[i] = (m[i] * (1 + rng.below(p - 1))) % p
        elif size > 1:
            j = rng.below(size)
            m[[i, j]] = m[[j, i]]
    return m


def random_type(rng, n: int) -> str:
    rng = _rng(rng)
    return "".join(rng.choice("fg") for _ in range(n - 1))


def random_module(rng, tau: str, max_dim: int, p: int) -> ZigzagModule:
    """Module with uniformly random dimensions in ``0..max_dim`` and random matrices."""
    rng = _rng(rng)
    dims = tuple(rng.below(max_dim + 1) for _ in range(len(tau) + 1))
    maps = tuple(random_matrix(rng, *arrow_shape(tau, dims, i), p) for i in range(1, len(tau) + 1))
    return ZigzagModule(p, tau, dims, maps)


@dataclass
class PlantedInstance:
    module: ZigzagModule
    truth: Barcode
    seed: int


def plant(seed: int, tau: str, max_intervals: int, p: int) -> PlantedInstance:
    """Scrambled direct sum of random intervals.

    The interval count is uniform on ``0..max_intervals`` and each interval is
    uniform over the subintervals of ``1..n``.
    """
    rng = SplitMix64(seed)
    n = len(tau) + 1
    spans = [(b, d) for b in range(1, n + 1) for d in range(b, n + 1)]
    count = rng.below(max_intervals + 1)
    chosen = [rng.choice(spans) for _ in range(count)]
    base = direct_sum_all((interval_module(tau, b, d, p) for b, d in chosen), tau, p)
    bases = [random_invertible(rng, a, p) for a in base.dims]
    return PlantedInstance(change_basis(base, bases), Barcode.from_intervals(chosen), seed)


def planted_suite(count: int, max_len: int = 8, max_intervals: int = 6, fields=(2, 5), start: int = 0):
    """Deterministic stream of planted instances over mixed types, lengths and fields."""
    for seed in range(start, start + count):
        rng = SplitMix64(seed ^ 0x5EED)
        n = 1 + rng.below(max_len)
        tau = random_type(rng, n)
        p = fields[rng.below(len(fields))]
        yield plant(seed, tau, max_intervals, p)


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters of a planted-recovery run."""

    count: int = 1000
    max_len: int = 8
    max_intervals: int = 6
    fields: tuple[int, ...] = (2, 5)
    start: int = 0

    def instances(self):
        return planted_suite(self.count, self.max_len, self.max_intervals, self.fields, self.start)


def write_fixture(inst: PlantedInstance, directory: str | Path, stem: str | None = None) -> tuple[Path, Path]:
    """Write ``<stem>.module.json`` and ``<stem>.barcode.json`` for cross-checking."""
    from .io import barcode_to_json, module_to_json

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    stem = stem or f"planted_{inst.seed}"
    mod_path = directory / f"{stem}.module.json"
    bc_path = directory / f"{stem}.barcode.json"
    mod_path.write_text(module_to_json(inst.module))
    bc_path.write_text(barcode_to_json(inst.truth, n=inst.module.n))
    return mod_path, bc_path


def random_complex_simplices(rng, n_vertices: int, n_top: int, max_size: int = 4) -> list[tuple[int, ...]]:
    """Random vertex subsets (before face closure)."""
    rng = _rng(rng)
    out = []
    for _ in range(n_top):
        size = 1 + rng.below(min(max_size, n_vertices))
        verts = set()
        while len(verts) < size:
            verts.add(rng.below(n_vertices))
        out.append(tuple(sorted(verts)))
    return out


def is_invertible(m: np.ndarray, p: int) -> bool:
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


def scramble(m: ZigzagModule, rng) -> ZigzagModule:
    rng = _rng(rng)
    return change_basis(m, [random_invertible(rng, a, m.p) for a in m.dims])

